"""
mc: Metropolis chain for one ensemble, with histogram, trace and checkpoint.
"""

import argparse

from src.commands.base import add_model_arg, add_output_args, emit, run_context
from src.enums import GeometryModel, InitMode
from src.services.equilibrium import EquilibriumManager
from src.services.montecarlo import MonteCarloManager
from src.services.montecarlo.checkpoint import metadata_path
from src.services.storage.config import HISTOGRAM_COLUMNS, TRACE_COLUMNS
from src.utils import UsageError

CHECKPOINT_NAME = "final_state.bin"
FILE_PREFIX = "file:"


def register(subparsers) -> None:
    parser = subparsers.add_parser("mc", help="Metropolis simulation of the eigenvalues")
    add_model_arg(parser)
    parser.add_argument("--g", type=float, default=0.0, help="Coupling constant")
    parser.add_argument("--N", dest="n", type=int, required=True, help="Matrix size")
    parser.add_argument("--sweeps", type=int, default=None)
    parser.add_argument("--burnin", type=int, default=None)
    parser.add_argument("--width", type=float, default=None, help="Initial proposal width")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--init", default=InitMode.EVEN.value, help="even, from-theory or file:PATH")
    parser.add_argument(
        "--positive-trace", dest="positive_trace", action="store_true",
        help="Sample (1,0) restricted to tr H >= 0",
    )
    add_output_args(parser)
    parser.set_defaults(handler=handle)


def _initialisation(args: argparse.Namespace, context):
    """(InitMode, density, explicit values) for the --init flag."""
    if args.init.startswith(FILE_PREFIX):
        values = MonteCarloManager.load_initial_values(args.init[len(FILE_PREFIX):])
        return InitMode.EXPLICIT, None, values
    try:
        mode = InitMode(args.init)
    except ValueError:
        raise UsageError(f"Unknown --init value: {args.init}")
    if mode is InitMode.FROM_THEORY:
        solved = EquilibriumManager(context.settings).run_equilibrium(args.model, args.g)
        return mode, solved["selection"].chosen.density, None
    if mode is InitMode.EXPLICIT:
        raise UsageError("Explicit initialisation is given as --init file:PATH")
    return mode, None, None


def handle(args: argparse.Namespace) -> int:
    with run_context("mc", args) as context:
        manager = MonteCarloManager(context.settings)
        mode, density, values = _initialisation(args, context)
        config = manager.build_config(
            args.model,
            args.n,
            g=args.g,
            sweeps=args.sweeps,
            burnin=args.burnin,
            width=args.width,
            seed=args.seed,
            init=mode,
            init_density=density,
            init_values=values,
            positive_trace=args.positive_trace,
        )
        context.seeds = [config.seed]
        result = manager.run(config, checkpoint_path=context.storage.path(CHECKPOINT_NAME))
        context.storage.register(CHECKPOINT_NAME)
        context.storage.register(metadata_path(CHECKPOINT_NAME))

        histogram, trace = result["histogram"], result["trace"]
        context.storage.write_csv(
            "histogram.csv", dict(zip(HISTOGRAM_COLUMNS, (histogram.centers, histogram.density)))
        )
        context.storage.write_csv(
            "trace.csv",
            dict(zip(TRACE_COLUMNS, (
                trace.sweeps, trace.order_parameter, trace.m2, trace.energy, trace.acceptance,
            ))),
        )
        summary = result["summary"]
        if args.model is GeometryModel.GAUSSIAN_BASELINE and summary["m2_stderr"] > 0:
            summary["semicircle_m2_deviation"] = (summary["mean_m2"] - 1.0) / summary["m2_stderr"]
        context.storage.write_json("mc_summary.json", summary)
    emit(summary)
    return 0
