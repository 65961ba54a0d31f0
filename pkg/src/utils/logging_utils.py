"""
Centralized logging configuration for fuzzy-spectra.
Provides consistent logging setup across solvers, samplers and commands.
"""

import logging
import sys
import os
from typing import Optional, Dict, Any
import time
import uuid
from functools import wraps
import json

import numpy as np

from src.enums import LogLevel


class ContextAdapter(logging.LoggerAdapter):
    """
    Logger adapter that adds contextual information to log messages.
    Prefixes the run_id when one is present in the context.
    """

    def process(self, msg, kwargs):
        extra = kwargs.get('extra', {})
        if self.extra:
            extra.update(self.extra)
            kwargs['extra'] = extra

        if extra and extra.get('run_id'):
            return f"[{extra.get('run_id')}] {msg}", kwargs
        return msg, kwargs


def get_logger(name: str, context: Optional[Dict[str, Any]] = None) -> logging.Logger:
    """
    Get a logger with the specified name and optional context.

    Args:
        name: Name of the logger (usually __name__)
        context: Optional dictionary with context info (e.g. run_id)

    Returns:
        Logger instance with proper configuration
    """
    logger = logging.getLogger(name)

    if context:
        return ContextAdapter(logger, context)

    return logger


def configure_logging(
    level: str = "INFO",
    log_format: Optional[str] = None,
    log_file: Optional[str] = None
) -> None:
    """
    Configure logging for the application.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_format: Custom log format string (if None, uses default format)
        log_file: Path to log file (if None, logs to stderr only)
    """
    if not log_format:
        log_format = (
            "%(asctime)s - %(levelname)s - %(name)s - "
            "%(filename)s:%(lineno)d - %(message)s"
        )

    try:
        numeric_level = LogLevel.parse(level).numeric

        handlers = []

        # stdout carries command results, so logs go to stderr
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(logging.Formatter(log_format))
        handlers.append(console_handler)

        if log_file:
            log_dir = os.path.dirname(log_file)
            if log_dir:
                os.makedirs(log_dir, exist_ok=True)
            file_handler = logging.FileHandler(log_file)
            file_handler.setFormatter(logging.Formatter(log_format))
            handlers.append(file_handler)

        logging.basicConfig(
            level=numeric_level,
            format=log_format,
            handlers=handlers,
            force=True
        )

    except ValueError as e:
        print(f"Warning: {str(e)}. Defaulting to INFO level.", file=sys.stderr)
        logging.basicConfig(
            level=logging.INFO,
            format=log_format,
            force=True
        )


def generate_run_id() -> str:
    """Generate a unique run ID for tracking a command in logs and manifests."""
    return str(uuid.uuid4())


def log_function_call(logger):
    """
    Decorator logging wall time of long-running calls and failures.

    Args:
        logger: Logger instance to use

    Returns:
        Decorated function
    """
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            started = time.perf_counter()
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                logger.error(
                    format_structured_log(
                        f"{func.__qualname__} failed",
                        {"error": str(e), "seconds": round(time.perf_counter() - started, 3)}
                    ),
                    exc_info=logger.isEnabledFor(logging.DEBUG)
                )
                raise
            logger.debug(
                format_structured_log(
                    f"{func.__qualname__} finished",
                    {"seconds": round(time.perf_counter() - started, 3)}
                )
            )
            return result
        return wrapper
    return decorator


def json_default(value: Any) -> Any:
    """JSON fallback for numpy values and enums."""
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if hasattr(value, "value"):
        return value.value
    return repr(value)


def format_structured_log(message: str, data: Dict[str, Any]) -> str:
    """
    Format a structured log message with JSON data.

    Args:
        message: Log message text
        data: Dictionary of data to include

    Returns:
        Formatted log message with JSON data
    """
    try:
        json_data = json.dumps(data, default=json_default)
        return f"{message} | {json_data}"
    except Exception:
        return f"{message} | {data!r}"
