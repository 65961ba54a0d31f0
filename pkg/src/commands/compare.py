"""
compare: distances between a theory density file and a Monte-Carlo histogram file.
"""

import argparse

from src.commands.base import add_output_args, emit, run_context
from src.services.montecarlo import compare_densities
from src.services.storage import read_csv
from src.services.storage.config import DENSITY_COLUMNS, HISTOGRAM_COLUMNS
from src.utils import ValidationError


def register(subparsers) -> None:
    parser = subparsers.add_parser("compare", help="Compare theory and Monte-Carlo densities")
    parser.add_argument("theory", help="CSV with columns lambda, rho")
    parser.add_argument("histogram", help="CSV with columns bin_center, density")
    add_output_args(parser)
    parser.set_defaults(handler=handle)


def _columns(path: str, names):
    frame = read_csv(path)
    missing = [c for c in names if c not in frame.columns]
    if missing:
        raise ValidationError(
            f"{path} lacks columns {missing}", details={"columns": list(frame.columns)}
        )
    return [frame[c].to_numpy(dtype=float) for c in names]


def handle(args: argparse.Namespace) -> int:
    with run_context("compare", args) as context:
        theory_x, theory_rho = _columns(args.theory, DENSITY_COLUMNS)
        hist_x, hist_rho = _columns(args.histogram, HISTOGRAM_COLUMNS)
        metrics = compare_densities(theory_x, theory_rho, hist_x, hist_rho)
        context.storage.write_json("comparison.json", metrics.dict())
    emit(metrics.dict())
    return 0
