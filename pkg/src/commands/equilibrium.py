"""
equilibrium: solve every applicable branch at one coupling and select the equilibrium.
"""

import argparse

from src.commands.base import (
    add_model_arg,
    add_output_args,
    ansatz_arg,
    emit,
    require_coupling,
    run_context,
)
from src.enums import RunStatus
from src.services.equilibrium import EquilibriumManager
from src.services.storage.config import DENSITY_COLUMNS


def register(subparsers) -> None:
    parser = subparsers.add_parser("equilibrium", help="Equilibrium measure at one coupling")
    add_model_arg(parser)
    parser.add_argument("--g", type=float, default=None, help="Coupling constant")
    parser.add_argument(
        "--ansatz", type=ansatz_arg, default=None,
        help="sym1, sym2, asym2 or auto (every applicable branch)",
    )
    parser.add_argument("--reduced", action="store_true", help="Four-edge (1,0) two-cut system")
    parser.add_argument("--samples", type=int, default=None, help="Density sample points")
    add_output_args(parser)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    g = require_coupling(args)
    with run_context("equilibrium", args) as context:
        settings = context.settings
        if args.samples:
            settings = settings.copy(update={"DENSITY_SAMPLE_POINTS": args.samples})
        manager = EquilibriumManager(settings, reduced=args.reduced)
        result = manager.run_equilibrium(args.model, g, args.ansatz)
        if result["status"] == RunStatus.PARTIAL.value:
            context.status = RunStatus.PARTIAL

        context.storage.write_csv(
            "density.csv", dict(zip(DENSITY_COLUMNS, (result["grid"], result["density"])))
        )
        if "symmetrized_density" in result:
            context.storage.write_csv(
                "density_symmetrized.csv",
                dict(zip(DENSITY_COLUMNS, (result["symmetrized_grid"], result["symmetrized_density"]))),
            )
        chosen = next(r for r in result["reports"] if r.chosen)
        summary = {
            "model": result["model"],
            "g": g,
            "chosen": chosen.dict(),
            "candidates": [r.dict() for r in result["reports"]],
            "failures": result["failures"],
            "degenerate": result["selection"].degenerate,
            "broken_symmetry": result["selection"].broken,
            "closure_error": result["closure_error"],
        }
        context.storage.write_json("solution.json", summary)
    emit(summary)
    return 0
