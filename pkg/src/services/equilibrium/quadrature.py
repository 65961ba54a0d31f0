"""
Quadrature rules for densities of the form smooth(x) * sqrt((hi - x)(x - lo)).
"""

from functools import lru_cache
from typing import Callable, Tuple

import numpy as np
from scipy import integrate
from scipy.special import roots_chebyu

from src.models import SpectralDensity
from src.services.equilibrium.config import (
    LOG_INTEGRAL_EPSABS,
    LOG_INTEGRAL_EPSREL,
    LOG_INTEGRAL_LIMIT,
)
from src.utils import PreconditionError


@lru_cache(maxsize=32)
def chebyshev_u_rule(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Nodes and weights for integral_{-1}^{1} f(t) sqrt(1 - t^2) dt."""
    if n < 1:
        raise PreconditionError("Quadrature needs at least one node", details={"n": n})
    nodes, weights = roots_chebyu(n)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def edge_weighted_nodes(lo: float, hi: float, n: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Nodes x_i and weights v_i with
    sum v_i f(x_i) ~ integral_lo^hi f(x) sqrt((hi - x)(x - lo)) dx.
    """
    t, w = chebyshev_u_rule(n)
    half = 0.5 * (hi - lo)
    return 0.5 * (hi + lo) + half * t, half * half * w


def edge_weighted_integral(f: Callable, lo: float, hi: float, n: int):
    x, v = edge_weighted_nodes(lo, hi, n)
    return np.dot(v, f(x))


def density_nodes(density: SpectralDensity, n: int):
    """
    Yield (cut index, nodes, weights) with sum weights * g(nodes) ~ integral of g * rho
    over that cut.
    """
    for index, cut in enumerate(density.cuts):
        x, v = edge_weighted_nodes(cut.lo, cut.hi, n)
        yield index, x, v * density.smooth_factor(index, x)


def density_integral(density: SpectralDensity, f: Callable, n: int):
    """integral f(x) rho(x) dx summed over all cuts."""
    total = 0.0
    for _, x, v in density_nodes(density, n):
        total = total + np.dot(v, f(x))
    return total


def log_kernel_integral(
    density: SpectralDensity,
    x0: float,
    epsabs: float = LOG_INTEGRAL_EPSABS,
    epsrel: float = LOG_INTEGRAL_EPSREL,
    limit: int = LOG_INTEGRAL_LIMIT,
) -> float:
    """
    integral log|x0 - x| rho(x) dx.

    Square-root edges and the logarithm are handled by QUADPACK's algebraic
    and algebraic-logarithmic weights; a cut containing x0 is split there.
    """
    total = 0.0
    for index, cut in enumerate(density.cuts):
        lo, hi = cut.lo, cut.hi

        def smooth(x, index=index):
            return float(density.smooth_factor(index, np.array([x]))[0])

        if lo < x0 < hi:
            # log(x0 - x) (x - lo)^(1/2) on [lo, x0]
            left, _ = integrate.quad(
                lambda x: smooth(x) * np.sqrt(hi - x), lo, x0,
                weight="alg-logb", wvar=(0.5, 0.0),
                epsabs=epsabs, epsrel=epsrel, limit=limit,
            )
            # log(x - x0) (hi - x)^(1/2) on [x0, hi]
            right, _ = integrate.quad(
                lambda x: smooth(x) * np.sqrt(x - lo), x0, hi,
                weight="alg-loga", wvar=(0.0, 0.5),
                epsabs=epsabs, epsrel=epsrel, limit=limit,
            )
            total += left + right
        else:
            value, _ = integrate.quad(
                lambda x: smooth(x) * np.log(abs(x0 - x)), lo, hi,
                weight="alg", wvar=(0.5, 0.5),
                epsabs=epsabs, epsrel=epsrel, limit=limit,
            )
            total += value
    return float(total)


def chebyshev_points(lo: float, hi: float, count: int) -> np.ndarray:
    """Chebyshev-distributed points on [lo, hi], clustered at both ends."""
    k = np.arange(count)
    return 0.5 * (hi + lo) + 0.5 * (hi - lo) * np.cos(np.pi * (k + 0.5) / count)
