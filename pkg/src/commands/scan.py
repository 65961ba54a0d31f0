"""
scan: candidates and selected equilibrium across a grid of couplings.
"""

import argparse

import pandas as pd

from src.commands.base import add_model_arg, add_output_args, emit, run_context
from src.enums import RunStatus
from src.services.equilibrium import EquilibriumManager
from src.services.storage.config import PHASE_COLUMNS
from src.utils import UsageError


def register(subparsers) -> None:
    parser = subparsers.add_parser("scan", help="Phase scan over a range of couplings")
    add_model_arg(parser)
    parser.add_argument("--g-from", dest="g_from", type=float, required=True)
    parser.add_argument("--g-to", dest="g_to", type=float, required=True)
    parser.add_argument("--step", type=float, required=True, help="Signed coupling step")
    parser.add_argument("--reduced", action="store_true", help="Four-edge (1,0) two-cut system")
    add_output_args(parser)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    if args.step == 0 or (args.g_to - args.g_from) * args.step < 0:
        raise UsageError(
            "--step must be non-zero and point from --g-from to --g-to",
            details={"g_from": args.g_from, "g_to": args.g_to, "step": args.step}
        )
    with run_context("scan", args) as context:
        manager = EquilibriumManager(context.settings, reduced=args.reduced)
        report = manager.scan(args.model, args.g_from, args.g_to, args.step)
        rows = manager.phase_rows(report)
        frame = pd.DataFrame([row.dict() for row in rows], columns=PHASE_COLUMNS)
        context.storage.write_csv("phase.csv", frame)

        unresolved = [e.g for e in report.entries if e.chosen is None]
        if unresolved:
            context.status = RunStatus.PARTIAL
        summary = {
            "model": args.model.value,
            "points": len(report.entries),
            "rows": len(rows),
            "critical": report.critical,
            "unresolved": unresolved,
        }
        context.storage.write_json("scan.json", summary)
    emit(summary)
    return 0
