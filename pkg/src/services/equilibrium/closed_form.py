"""
Closed-form symmetric equilibrium measures of the (0,1) ensemble.

The (1,0) ensemble restricted to m1 = m3 = 0 has the same effective
potential, so these are also its symmetric candidates.
"""

import math
from typing import Tuple

import numpy as np
from scipy.optimize import brentq

from src.models import (
    DensityCut,
    OneCutSymmetric,
    SpectralDensity,
    TwoCutSymmetric,
)
from src.services.equilibrium.config import CRITICAL_COUPLING_01, CRITICAL_MATCH_TOL
from src.utils import OutOfBranchError, get_logger

logger = get_logger(__name__)

CRITICAL_EDGE = 2.0 ** 0.25


def coupling_of_edge(b: float) -> float:
    """g(b) = 1/b^2 - 3 b^2 - (3/4) b^6, strictly decreasing for b > 0."""
    return 1.0 / b ** 2 - 3.0 * b ** 2 - 0.75 * b ** 6


def _is_critical(g: float) -> bool:
    return abs(g - CRITICAL_COUPLING_01) <= CRITICAL_MATCH_TOL


def critical_density(b: float = CRITICAL_EDGE) -> SpectralDensity:
    """(4 x^2 / pi) sqrt(b^2 - x^2), where the gap has just closed."""
    return SpectralDensity((DensityCut(-b, b, (0.0, 0.0, 4.0)),))


def solve_one_cut_01(g: float) -> Tuple[OneCutSymmetric, SpectralDensity]:
    """
    Symmetric 1-cut solution on [-b, b] for g >= -4 sqrt(2).

    Raises:
        OutOfBranchError: g below the branch boundary
    """
    if _is_critical(g):
        b = CRITICAL_EDGE
    elif g < CRITICAL_COUPLING_01:
        raise OutOfBranchError(
            "Symmetric 1-cut solution needs g >= -4 sqrt(2)",
            details={"g": g, "boundary": CRITICAL_COUPLING_01}
        )
    else:
        lo = min(1.0, 1.0 / math.sqrt(abs(g) + 1.0)) * 1e-3
        b = brentq(lambda t: coupling_of_edge(t) - g, lo, CRITICAL_EDGE, xtol=1e-15, rtol=1e-15)
        # one Newton polish on g(b) = g
        slope = -2.0 / b ** 3 - 6.0 * b - 4.5 * b ** 5
        b -= (coupling_of_edge(b) - g) / slope
        b = min(b, CRITICAL_EDGE)

    b2 = b * b
    m2 = b2 / 4.0 + b2 ** 3 / 8.0
    density = SpectralDensity((DensityCut(-b, b, (2.0 / b2 - b2, 0.0, 4.0)),))
    logger.debug(f"Symmetric 1-cut (0,1) solution: g={g}, b={b:.15g}, m2={m2:.15g}")
    return OneCutSymmetric(b=b, g=g, m2=m2), density


def two_cut_edges(g: float) -> Tuple[float, float]:
    """Inner and outer edges a, b of the symmetric 2-cut support."""
    root2 = math.sqrt(2.0)
    b = math.sqrt(-g + 4.0 * root2) / (2.0 * root2)
    a = math.sqrt(max(-g - 4.0 * root2, 0.0)) / (2.0 * root2)
    return a, b


def solve_two_cut_01(g: float) -> Tuple[TwoCutSymmetric, SpectralDensity]:
    """
    Symmetric 2-cut solution on [-b, -a] u [a, b] for g <= -4 sqrt(2).

    At the boundary itself a = 0 and the density is returned as a single cut.

    Raises:
        OutOfBranchError: g above the branch boundary
    """
    if g > CRITICAL_COUPLING_01 and not _is_critical(g):
        raise OutOfBranchError(
            "Symmetric 2-cut solution needs g <= -4 sqrt(2)",
            details={"g": g, "boundary": CRITICAL_COUPLING_01}
        )
    a, b = (0.0, CRITICAL_EDGE) if _is_critical(g) else two_cut_edges(g)
    m2 = -g / 8.0
    if a == 0.0:
        density = critical_density(b)
    else:
        density = SpectralDensity(
            (
                DensityCut(-b, -a, (0.0, -4.0)),
                DensityCut(a, b, (0.0, 4.0)),
            ),
            (-b, -a, a, b),
        )
    return TwoCutSymmetric(a=a, b=b, g=g, m2=m2), density


def symmetric_free_energy_01(g: float) -> float:
    """Free energy of the symmetric 2-cut solution, -g^2/8 + 3/8 + (3/4) log 2."""
    if g > CRITICAL_COUPLING_01 and not _is_critical(g):
        raise OutOfBranchError(
            "Symmetric 2-cut solution needs g <= -4 sqrt(2)", details={"g": g}
        )
    return -g * g / 8.0 + 0.375 + 0.75 * math.log(2.0)


def gaussian_baseline_density(radius: float = 2.0) -> SpectralDensity:
    """Semicircle sqrt(radius^2 - x^2) * 2 / (pi radius^2)."""
    return SpectralDensity((DensityCut(-radius, radius, (2.0 / radius ** 2,)),))


def semicircle_values(x, radius: float = 2.0) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    inside = np.clip(radius ** 2 - x * x, 0.0, None)
    return 2.0 * np.sqrt(inside) / (np.pi * radius ** 2)
