"""
Subcommands of the fuzzy-spectra command line.
"""

import argparse

from src.commands import compare, critical, dirac, equilibrium, mc, scan

COMMAND_MODULES = (equilibrium, scan, critical, mc, compare, dirac)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzy-spectra",
        description="Equilibrium measures, phase transitions and Monte-Carlo checks "
                    "for the (1,0) and (0,1) fuzzy-geometry matrix models",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in COMMAND_MODULES:
        module.register(subparsers)
    return parser


__all__ = ["build_parser", "COMMAND_MODULES"]
