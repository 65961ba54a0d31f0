"""
Application initialisation for fuzzy-spectra.
Responsible for logging setup and settings validation before a command runs.
"""

from typing import Optional

from config.config import get_settings, validate_settings
from src.utils import configure_logging, get_logger
from src.utils.exceptions import ConfigurationError

logger = get_logger(__name__)


def init_app(log_level: Optional[str] = None) -> bool:
    """
    Initialize the application.
    Sets up logging and validates the numerical settings.

    Args:
        log_level: Overrides LOG_LEVEL from the settings

    Raises:
        ConfigurationError: If the settings are invalid
    """
    settings = get_settings()
    configure_logging(
        level=log_level or settings.LOG_LEVEL,
        log_file=settings.LOG_FILE
    )
    logger.debug(f"Application: {settings.APP_NAME} v{settings.APP_VERSION}")

    problems = validate_settings()
    if problems:
        problems_str = ", ".join(problems)
        logger.error(f"Invalid settings: {problems_str}")
        raise ConfigurationError(
            f"Invalid settings: {problems_str}",
            details={"problems": problems}
        )

    logger.debug("Application initialized successfully")
    return True
