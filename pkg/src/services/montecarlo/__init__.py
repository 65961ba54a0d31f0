"""
Metropolis sampling of the finite-N eigenvalue ensembles.
"""

from src.services.montecarlo.checkpoint import read_checkpoint, write_checkpoint
from src.services.montecarlo.comparison import compare_densities
from src.services.montecarlo.histogram import empirical_density
from src.services.montecarlo.metropolis import ChainState, initial_values, metropolis_sweep, run_chain
from src.services.montecarlo.montecarlo_manager import MonteCarloManager

__all__ = [
    "ChainState",
    "MonteCarloManager",
    "compare_densities",
    "empirical_density",
    "initial_values",
    "metropolis_sweep",
    "read_checkpoint",
    "run_chain",
    "write_checkpoint",
]
