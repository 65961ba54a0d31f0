"""
Action and Coulomb-gas energy of eigenvalue configurations.

The joint eigenvalue density of both ensembles is proportional to
exp(-N^2 E(lambda)) with E = S - (2/N^2) sum_{i<j} log|lambda_i - lambda_j|.
"""

import numpy as np

from src.enums import GeometryModel
from src.models import EigenvalueConfig, PowerSums
from src.services.ensemble.config import (
    GAUSSIAN_WEIGHT,
    P1_P3_WEIGHT,
    P1_SQUARED_WEIGHT,
    P2_SQUARED_WEIGHT,
    QUARTIC_WEIGHT,
    REPULSION_WEIGHT,
)
from src.utils import DegenerateConfigurationError, get_logger

logger = get_logger(__name__)


def action_from_power_sums(sums: PowerSums, n: int, model: GeometryModel, g: float) -> float:
    """Action S^{+-}_g written through power sums."""
    if model is GeometryModel.GAUSSIAN_BASELINE:
        return GAUSSIAN_WEIGHT * sums.p2 / n
    sign = model.sign
    inv_n2 = 1.0 / (n * n)
    return (
        QUARTIC_WEIGHT / n * (sums.p4 + g * sums.p2)
        + sign * P1_SQUARED_WEIGHT * g * inv_n2 * sums.p1 ** 2
        + sign * P1_P3_WEIGHT * inv_n2 * sums.p1 * sums.p3
        + P2_SQUARED_WEIGHT * inv_n2 * sums.p2 ** 2
    )


def action_of_eigenvalues(config: EigenvalueConfig) -> float:
    """
    Action of an eigenvalue configuration.

    Raises:
        ModelDomainError: non-finite eigenvalues or a (0,1) configuration
            with non-vanishing trace
    """
    config.validate()
    sums = PowerSums.from_values(config.values)
    return action_from_power_sums(sums, config.n, config.model, config.g)


def log_repulsion(values) -> float:
    """sum_{i<j} log|lambda_i - lambda_j|."""
    x = np.asarray(values, dtype=float)
    if x.size < 2:
        return 0.0
    diff = np.abs(np.subtract.outer(x, x))[np.triu_indices(x.size, k=1)]
    if np.any(diff == 0.0):
        raise DegenerateConfigurationError(
            "Coincident eigenvalues make the Coulomb energy diverge",
            details={"coincident_pairs": int(np.count_nonzero(diff == 0.0))}
        )
    return float(np.log(diff).sum())


def coulomb_energy(config: EigenvalueConfig) -> float:
    """E = S - (2/N^2) sum_{i<j} log|lambda_i - lambda_j|."""
    action = action_of_eigenvalues(config)
    n = config.n
    return action - REPULSION_WEIGHT / (n * n) * log_repulsion(config.values)


def coulomb_energy_gradient(values, model: GeometryModel, g: float) -> np.ndarray:
    """Gradient of the Coulomb energy with respect to each eigenvalue."""
    x = np.asarray(values, dtype=float)
    n = x.size
    sums = PowerSums.from_values(x)
    inv_n2 = 1.0 / (n * n)
    if model is GeometryModel.GAUSSIAN_BASELINE:
        grad = 2.0 * GAUSSIAN_WEIGHT * x / n
    else:
        sign = model.sign
        grad = (
            QUARTIC_WEIGHT / n * (4.0 * x ** 3 + 2.0 * g * x)
            + sign * 2.0 * P1_SQUARED_WEIGHT * g * inv_n2 * sums.p1
            + sign * P1_P3_WEIGHT * inv_n2 * (sums.p3 + 3.0 * x ** 2 * sums.p1)
            + 4.0 * P2_SQUARED_WEIGHT * inv_n2 * sums.p2 * x
        )
    diff = np.subtract.outer(x, x)
    np.fill_diagonal(diff, np.inf)
    grad = grad - REPULSION_WEIGHT * inv_n2 * (1.0 / diff).sum(axis=1)
    return grad


def power_sum_delta(sums: PowerSums, old: float, new: float) -> PowerSums:
    """Replace the contribution of `old` by `new` in every power sum."""
    if old == new:
        return sums
    old2, new2 = old * old, new * new
    return PowerSums(
        sums.p1 - old + new,
        sums.p2 - old2 + new2,
        sums.p3 - old2 * old + new2 * new,
        sums.p4 - old2 * old2 + new2 * new2,
    )


def log_distance_delta(values, index: int, new: float) -> float:
    """Change of sum_{j != index} log|lambda_index - lambda_j| when lambda_index -> new."""
    x = np.asarray(values, dtype=float)
    others = np.delete(x, index)
    new_dist = np.abs(new - others)
    if np.any(new_dist == 0.0):
        return -np.inf
    return float(np.log(new_dist).sum() - np.log(np.abs(x[index] - others)).sum())


def pair_log_distance_delta(values, i: int, j: int, new_i: float, new_j: float) -> float:
    """Change of the pair log sum when lambda_i and lambda_j move together."""
    x = np.asarray(values, dtype=float)
    mask = np.ones(x.size, dtype=bool)
    mask[[i, j]] = False
    others = x[mask]
    new_i_dist = np.abs(new_i - others)
    new_j_dist = np.abs(new_j - others)
    cross = abs(new_i - new_j)
    if cross == 0.0 or np.any(new_i_dist == 0.0) or np.any(new_j_dist == 0.0):
        return -np.inf
    old = np.log(np.abs(x[i] - others)).sum() + np.log(np.abs(x[j] - others)).sum()
    new = np.log(new_i_dist).sum() + np.log(new_j_dist).sum()
    return float(new - old + np.log(cross) - np.log(abs(x[i] - x[j])))
