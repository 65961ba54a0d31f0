"""
dirac: spectral density of D+ or D- for the equilibrium at one coupling.
"""

import argparse

from src.commands.base import add_model_arg, add_output_args, emit, require_coupling, run_context
from src.enums import DiracSign
from src.services.dirac import DiracManager
from src.services.storage.config import DIRAC_COLUMNS


def _sign(value: str) -> DiracSign:
    try:
        return DiracSign.from_string(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def register(subparsers) -> None:
    parser = subparsers.add_parser("dirac", help="Dirac-operator spectral density")
    add_model_arg(parser)
    parser.add_argument("--g", type=float, default=None, help="Coupling constant")
    parser.add_argument("--sign", type=_sign, default=DiracSign.PLUS, help="+ for {H, .}, - for [H, .]")
    add_output_args(parser)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    g = require_coupling(args)
    with run_context("dirac", args) as context:
        result = DiracManager(context.settings).run(args.model, g, args.sign)
        density = result["dirac"]
        context.storage.write_csv("dirac.csv", dict(zip(DIRAC_COLUMNS, (density.grid, density.values))))
        summary = {
            "model": args.model.value,
            "g": g,
            "sign": args.sign.value,
            "ansatz": result["solution"].ansatz.value,
            "integral": density.integral(),
            "mean": density.mean(),
            "grid_points": int(density.grid.size),
        }
        context.storage.write_json("dirac.json", summary)
    emit(summary)
    return 0
