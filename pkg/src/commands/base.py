"""
Shared argument handling and run context for the subcommands.
"""

import argparse
import json
import sys
from contextlib import contextmanager
from typing import Any, Dict, Iterator, List, Optional

from config.config import get_settings
from src.enums import Ansatz, GeometryModel, LogLevel, RunStatus
from src.services.storage import StorageManager
from src.utils import (
    BaseAppException,
    UsageError,
    generate_run_id,
    get_logger,
)
from src.utils.logging_utils import json_default

logger = get_logger(__name__)

AUTO_ANSATZ = "auto"


def model_arg(value: str) -> GeometryModel:
    try:
        return GeometryModel.from_string(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def ansatz_arg(value: str) -> Optional[Ansatz]:
    if value.strip().lower() == AUTO_ANSATZ:
        return None
    try:
        return Ansatz(value.strip().lower())
    except ValueError:
        raise argparse.ArgumentTypeError(f"Unknown ansatz: {value}")


def add_output_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", default=None, help="Output directory (default: OUTPUT_DIR)")
    parser.add_argument(
        "--log-level",
        default=None,
        type=str.upper,
        choices=LogLevel.choices(),
        help="Override LOG_LEVEL",
    )


def add_model_arg(parser: argparse.ArgumentParser, default: Optional[str] = None) -> None:
    parser.add_argument(
        "--model",
        type=model_arg,
        required=default is None,
        default=model_arg(default) if default else None,
        help="Ensemble: 10, 01 or gue",
    )


def require_coupling(args: argparse.Namespace) -> float:
    """--g is required for the interacting models and ignored for the Gaussian baseline."""
    if args.model is GeometryModel.GAUSSIAN_BASELINE:
        return 0.0
    if args.g is None:
        raise UsageError("--g is required for the (1,0) and (0,1) models")
    return args.g


def parameter_record(args: argparse.Namespace) -> Dict[str, Any]:
    """Command-line arguments as a JSON-ready dictionary."""
    record = {}
    for key, value in sorted(vars(args).items()):
        if key == "handler":
            continue
        if hasattr(value, "value"):
            value = value.value
        record[key] = value
    return record


class RunContext:
    """Run identifier, run-scoped logger and artifact storage for one command."""

    def __init__(self, command: str, args: argparse.Namespace):
        self.command = command
        self.args = args
        self.settings = get_settings()
        self.run_id = generate_run_id()
        self.logger = get_logger(f"src.commands.{command}", {"run_id": self.run_id})
        self.storage = StorageManager(out_dir=args.out, run_id=self.run_id)
        self.seeds: List[int] = []
        self.status = RunStatus.COMPLETED

    def finish(self) -> None:
        self.storage.write_manifest(
            self.command,
            parameter_record(self.args),
            settings=self.settings.dict(),
            seeds=self.seeds,
            status=self.status,
        )


@contextmanager
def run_context(command: str, args: argparse.Namespace) -> Iterator[RunContext]:
    """
    Open a run; the manifest is written on success and on application errors.
    """
    context = RunContext(command, args)
    context.logger.info(f"Command started: {command}")
    try:
        yield context
    except BaseAppException as e:
        context.status = RunStatus.FAILED
        context.logger.error(f"Command failed: {command} [{e.code.name}]")
        context.finish()
        raise
    context.finish()
    context.logger.info(f"Command completed: {command} [{context.status.value}]")


def emit(payload: Dict[str, Any]) -> None:
    """Print a command's summary as JSON on stdout."""
    json.dump(payload, sys.stdout, sort_keys=True, indent=2, default=json_default)
    sys.stdout.write("\n")
