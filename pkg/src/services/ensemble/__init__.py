"""
Finite-N ensembles: action, Coulomb-gas energy and incremental updates.
"""

from src.services.ensemble.action import (
    action_from_power_sums,
    action_of_eigenvalues,
    coulomb_energy,
    coulomb_energy_gradient,
    log_distance_delta,
    log_repulsion,
    pair_log_distance_delta,
    power_sum_delta,
)

__all__ = [
    "action_from_power_sums",
    "action_of_eigenvalues",
    "coulomb_energy",
    "coulomb_energy_gradient",
    "log_distance_delta",
    "log_repulsion",
    "pair_log_distance_delta",
    "power_sum_delta",
]
