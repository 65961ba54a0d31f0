"""
Generate the plot data for the standard figure set: phase scans, critical
couplings, Monte-Carlo histograms next to their theory curves and Dirac
densities. Every scenario runs one fuzzy-spectra subcommand into its own
output directory, so each one carries its own manifest.
"""

import os
import sys
import argparse
from typing import Dict, List, Optional


# Add project root to path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.main import main as cli_main
from src.utils import configure_logging, get_logger


configure_logging(level="INFO")
logger = get_logger(__name__)

# name -> subcommand arguments (output directory appended per run)
THEORY_SCENARIOS: Dict[str, List[str]] = {
    "scan_01": ["scan", "--model", "01", "--g-from", "-1", "--g-to", "-8", "--step", "-0.05"],
    "scan_10": ["scan", "--model", "10", "--g-from", "-1", "--g-to", "-6", "--step", "-0.05"],
    "critical_01": ["critical", "--model", "01"],
    "critical_10": ["critical", "--model", "10"],
    "equilibrium_10_g-3": ["equilibrium", "--model", "10", "--g", "-3"],
    "equilibrium_01_g-7": ["equilibrium", "--model", "01", "--g", "-7"],
    "equilibrium_10_g-4": ["equilibrium", "--model", "10", "--g", "-4"],
    "dirac_10_g-3": ["dirac", "--model", "10", "--g", "-3", "--sign", "+"],
    "dirac_01_g-7": ["dirac", "--model", "01", "--g", "-7", "--sign", "-"],
}

# name -> (subcommand arguments, theory scenario whose density.csv it is compared with)
SAMPLING_SCENARIOS: Dict[str, tuple] = {
    "mc_10_g-3": (["mc", "--model", "10", "--g", "-3", "--N", "128"], "equilibrium_10_g-3"),
    "mc_01_g-7": (["mc", "--model", "01", "--g", "-7", "--N", "128"], "equilibrium_01_g-7"),
    "mc_10_g-4": (
        ["mc", "--model", "10", "--g", "-4", "--N", "128", "--init", "from-theory"],
        "equilibrium_10_g-4",
    ),
    "mc_gue": (["mc", "--model", "gue", "--N", "64", "--sweeps", "20000"], None),
}


def run_scenario(name: str, command: List[str], output_dir: str) -> int:
    """Run one subcommand with its outputs under output_dir/name."""
    out = os.path.join(output_dir, name)
    logger.info(f"Running scenario {name}: {' '.join(command)}")
    code = cli_main(command + ["--out", out])
    if code != 0:
        logger.error(f"Scenario {name} exited with code {code}")
    return code


def reproduce(
    output_dir: str,
    sweeps: Optional[int] = None,
    seed: Optional[int] = None,
    skip_sampling: bool = False,
) -> Dict[str, int]:
    """
    Run every scenario and compare each Monte-Carlo histogram with its theory density.

    Args:
        output_dir: Root directory for the scenario outputs
        sweeps: Sweep count for the (1,0) and (0,1) chains (default: MC_SWEEPS)
        seed: Seed for every chain (default: MC_SEED)
        skip_sampling: Only run the deterministic scenarios

    Returns:
        Exit code per scenario
    """
    os.makedirs(output_dir, exist_ok=True)
    codes = {name: run_scenario(name, command, output_dir) for name, command in THEORY_SCENARIOS.items()}
    if skip_sampling:
        return codes

    for name, (command, theory) in SAMPLING_SCENARIOS.items():
        command = list(command)
        if sweeps is not None and "--sweeps" not in command:
            command += ["--sweeps", str(sweeps)]
        if seed is not None:
            command += ["--seed", str(seed)]
        codes[name] = run_scenario(name, command, output_dir)
        if theory is None or codes[name] != 0 or codes.get(theory) != 0:
            continue
        codes[f"compare_{name}"] = run_scenario(
            f"compare_{name}",
            [
                "compare",
                os.path.join(output_dir, theory, "density.csv"),
                os.path.join(output_dir, name, "histogram.csv"),
            ],
            output_dir,
        )
    return codes


def main():
    """Main function to parse arguments and run the scenarios."""
    parser = argparse.ArgumentParser(description="Generate plot data for the standard figure set")
    parser.add_argument("--output-dir", default="output/figures", help="Root directory for the outputs")
    parser.add_argument("--sweeps", type=int, help="Sweeps per chain (default: MC_SWEEPS)")
    parser.add_argument("--seed", type=int, help="Seed for every chain (default: MC_SEED)")
    parser.add_argument("--skip-sampling", action="store_true", help="Skip the Monte-Carlo scenarios")

    args = parser.parse_args()

    codes = reproduce(args.output_dir, sweeps=args.sweeps, seed=args.seed, skip_sampling=args.skip_sampling)
    failed = [name for name, code in codes.items() if code != 0]
    for name, code in codes.items():
        logger.info(f"  - {name}: exit {code}")
    if failed:
        logger.error(f"{len(failed)} scenario(s) failed: {', '.join(failed)}")
        sys.exit(1)
    logger.info(f"All {len(codes)} scenarios completed in {args.output_dir}")


if __name__ == "__main__":
    main()
