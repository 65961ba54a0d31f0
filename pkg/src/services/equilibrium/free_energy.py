"""
Free energy of equilibrium candidates, selection of the equilibrium and
the Lagrange multiplier that enforces normalisation.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from src.enums import Ansatz, ErrorCode, GeometryModel
from src.models import (
    CandidateParams,
    EquilibriumSolution,
    Moments,
    SpectralDensity,
)
from src.services.equilibrium.config import (
    DEGENERACY_TOL,
    DIRECT_OUTER_NODES,
    MULTIPLIER_SAMPLES,
    MULTIPLIER_POINTS_PER_CUT,
)
from src.services.equilibrium.quadrature import chebyshev_points, density_nodes, log_kernel_integral
from src.services.equilibrium.riemann_hilbert import density_moment
from src.utils import PreconditionError, SelectionError, get_logger

logger = get_logger(__name__)

EDGE_CLEARANCE = 1e-3


def bare_potential(model: GeometryModel, g: float) -> np.ndarray:
    """Ascending coefficients of V: 2x^4 + 2g x^2, or x^2/2 for the Gaussian baseline."""
    if model is GeometryModel.GAUSSIAN_BASELINE:
        return np.array([0.0, 0.0, 0.5])
    return np.array([0.0, 0.0, 2.0 * g, 0.0, 2.0])


def interaction_potential(model: GeometryModel, g: float, m: Moments) -> np.ndarray:
    """Ascending coefficients of 2 integral U(x, y) rho(y) dy."""
    if model is GeometryModel.PLUS:
        return np.array([0.0, 4.0 * g * m.m1 + 8.0 * m.m3, 12.0 * m.m2, 8.0 * m.m1])
    if model is GeometryModel.MINUS:
        return np.array([0.0, 0.0, 12.0 * m.m2])
    return np.zeros(1)


def _effective(model: GeometryModel, g: float, m: Moments) -> np.ndarray:
    return P.polyadd(bare_potential(model, g), interaction_potential(model, g, m))


def lagrange_multiplier(
    model: GeometryModel,
    g: float,
    density: SpectralDensity,
    moments: Moments,
    lam0: float,
) -> float:
    """
    l = V(x0) + 2 integral U(x0, y) rho(y) dy + 2 integral log(1/|x0 - y|) rho(y) dy.

    Raises:
        PreconditionError: x0 not inside a cut by at least 1e-3 of its width
    """
    inside = any(
        cut.lo + EDGE_CLEARANCE * cut.width <= lam0 <= cut.hi - EDGE_CLEARANCE * cut.width
        for cut in density.cuts
    )
    if not inside:
        raise PreconditionError(
            "Lagrange multiplier must be evaluated inside the support",
            details={"lambda0": lam0, "edges": list(density.edges)}
        )
    w = _effective(model, g, moments)
    return float(P.polyval(lam0, w) - 2.0 * log_kernel_integral(density, lam0))


def multiplier_points(
    density: SpectralDensity,
    per_cut: int = MULTIPLIER_POINTS_PER_CUT,
    samples: int = MULTIPLIER_SAMPLES,
) -> List[float]:
    """
    Interior points where l is evaluated: on every cut the density maximum
    plus per_cut - 1 Chebyshev points, all clear of the edges.
    """
    if per_cut < 1:
        raise PreconditionError("Need at least one multiplier point per cut", details={"per_cut": per_cut})
    points = []
    for cut in density.cuts:
        margin = 2.0 * EDGE_CLEARANCE * cut.width
        lo, hi = cut.lo + margin, cut.hi - margin
        x = np.linspace(lo, hi, samples)
        points.append(float(x[np.argmax(density(x))]))
        points.extend(float(p) for p in np.sort(chebyshev_points(lo, hi, per_cut - 1)))
    return points


def lagrange_profile(
    model: GeometryModel,
    g: float,
    density: SpectralDensity,
    moments: Moments,
    points: Optional[Sequence[float]] = None,
) -> Tuple[float, float]:
    """Mean and spread of l over the multiplier points."""
    points = multiplier_points(density) if points is None else points
    values = [lagrange_multiplier(model, g, density, moments, p) for p in points]
    return float(np.mean(values)), float(np.max(values) - np.min(values))


def potential_moment(model: GeometryModel, g: float, density: SpectralDensity) -> float:
    """integral V rho."""
    if model is GeometryModel.GAUSSIAN_BASELINE:
        return 0.5 * density_moment(density, 2)
    return 2.0 * density_moment(density, 4) + 2.0 * g * density_moment(density, 2)


def free_energy_of(
    model: GeometryModel,
    g: float,
    density: SpectralDensity,
    moments: Moments,
    ell: Optional[float] = None,
) -> float:
    """E = l / 2 + (1/2) integral V rho."""
    if ell is None:
        ell, _ = lagrange_profile(model, g, density, moments)
    return 0.5 * ell + 0.5 * potential_moment(model, g, density)


def interaction_energy(model: GeometryModel, m: Moments, g: float) -> float:
    """Double integral of U rho rho as a polynomial in the moments."""
    if model is GeometryModel.PLUS:
        return 2.0 * g * m.m1 ** 2 + 8.0 * m.m1 * m.m3 + 6.0 * m.m2 ** 2
    if model is GeometryModel.MINUS:
        return 6.0 * m.m2 ** 2
    return 0.0


def direct_free_energy(
    model: GeometryModel,
    g: float,
    density: SpectralDensity,
    outer_nodes: int = DIRECT_OUTER_NODES,
) -> float:
    """
    E = integral V rho + double integral U rho rho + double integral log(1/|x - y|) rho rho,
    evaluated without using the constancy of the Lagrange multiplier.
    """
    m = Moments(*(density_moment(density, n) for n in (1, 2, 3)))
    logarithmic = 0.0
    for _, x, v in density_nodes(density, outer_nodes):
        inner = np.array([log_kernel_integral(density, float(xi)) for xi in x])
        logarithmic -= float(np.dot(v, inner))
    return potential_moment(model, g, density) + interaction_energy(model, m, g) + logarithmic


def variational_margin(
    model: GeometryModel,
    g: float,
    density: SpectralDensity,
    moments: Moments,
    ell: float,
    points: Iterable[float],
) -> np.ndarray:
    """W(x) - 2 integral log|x - y| rho(y) dy - l at points off the support; >= 0 at equilibrium."""
    w = _effective(model, g, moments)
    values = []
    for x in points:
        if density.contains(x):
            raise PreconditionError(
                "Variational margin is evaluated off the support", details={"x": x}
            )
        values.append(P.polyval(x, w) - 2.0 * log_kernel_integral(density, float(x)) - ell)
    return np.asarray(values)


def symmetrized_density(density: SpectralDensity, grid) -> np.ndarray:
    """(rho(x) + rho(-x)) / 2."""
    grid = np.asarray(grid, dtype=float)
    return 0.5 * (density(grid) + density(-grid))


def solution_from_params(
    model: GeometryModel,
    g: float,
    params: CandidateParams,
    density: SpectralDensity,
    residual_norm: float = 0.0,
) -> EquilibriumSolution:
    """Attach the Lagrange multiplier and free energy to a converged candidate."""
    ell, spread = lagrange_profile(model, g, density, params.moments)
    energy = free_energy_of(model, g, density, params.moments, ell=ell)
    return EquilibriumSolution(
        model=model,
        g=g,
        params=params,
        density=density,
        lagrange=ell,
        free_energy=energy,
        residual_norm=residual_norm,
        lagrange_spread=spread,
    )


@dataclass(frozen=True)
class Selection:
    """Outcome of comparing the candidates at one coupling."""

    chosen: EquilibriumSolution
    degenerate: bool
    broken: bool
    runner_up: Optional[EquilibriumSolution] = None


def select_equilibrium(
    model: GeometryModel,
    g: float,
    candidates: Sequence[EquilibriumSolution],
    degeneracy_tol: float = DEGENERACY_TOL,
) -> Selection:
    """
    Pick the candidate with the lowest free energy.

    A broken-symmetry winner is reported with m1 >= 0 and flagged so callers
    can also emit the symmetrized mean density.

    Raises:
        SelectionError: no candidates
    """
    if not candidates:
        raise SelectionError(
            "No converged candidates to select from",
            code=ErrorCode.EMPTY_CANDIDATES,
            details={"model": model.value, "g": g}
        )
    ranked = sorted(candidates, key=lambda s: s.free_energy)
    chosen = ranked[0]
    runner_up = ranked[1] if len(ranked) > 1 else None
    degenerate = runner_up is not None and (
        runner_up.free_energy - chosen.free_energy < degeneracy_tol
    )
    if chosen.moments.m1 < 0.0:
        chosen = chosen.mirrored()
    broken = not chosen.ansatz.symmetric and abs(chosen.moments.m1) > 0.0
    logger.debug(
        f"Selected {chosen.ansatz.value} at g={g}: E={chosen.free_energy:.12g}"
        + (" (degenerate)" if degenerate else "")
    )
    return Selection(chosen=chosen, degenerate=degenerate, broken=broken, runner_up=runner_up)


def symmetric_ansatz_for(g: float, boundary: float) -> Ansatz:
    """Symmetric candidate that exists at g: 1-cut above the (0,1) boundary, 2-cut below."""
    return Ansatz.SYM1 if g > boundary else Ansatz.SYM2
