"""
critical: critical coupling of a model inside a bracket.
"""

import argparse

from src.commands.base import add_model_arg, add_output_args, emit, run_context
from src.services.equilibrium import EquilibriumManager


def register(subparsers) -> None:
    parser = subparsers.add_parser("critical", help="Locate the critical coupling")
    add_model_arg(parser)
    parser.add_argument(
        "--bracket", nargs=2, type=float, metavar=("LO", "HI"), default=None,
        help="Coupling bracket (default depends on the model)",
    )
    add_output_args(parser)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    lo, hi = args.bracket if args.bracket else (None, None)
    with run_context("critical", args) as context:
        result = EquilibriumManager(context.settings).critical(args.model, lo, hi)
        context.storage.write_json("critical.json", result)
    emit(result)
    return 0
