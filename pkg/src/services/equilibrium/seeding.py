"""
Starting solutions for each ansatz.

Symmetric branches start from the (0,1) closed forms. The broken-symmetry
(1,0) branch has no closed form; it is seeded by relaxing a finite-N
Coulomb gas, by continuing a tabulated solution, or by a potential-well
guess, in that order.
"""

import math
from typing import Callable, List, Optional, Tuple

import numpy as np
from scipy.optimize import minimize

from src.enums import Ansatz, GeometryModel
from src.models import (
    CandidateParams,
    EquilibriumSolution,
    Moments,
    PowerSums,
    TwoCutSupport,
)
from src.services.ensemble import action_from_power_sums, coulomb_energy_gradient, log_repulsion
from src.services.equilibrium.closed_form import solve_one_cut_01, solve_two_cut_01
from src.services.equilibrium.config import (
    BROKEN_BRANCH_ANCHORS,
    BROKEN_MIN_M1,
    CRITICAL_COUPLING_01,
    DEFAULT_GAP_NODES,
    SEED_LEFT_FRACTIONS,
    SEED_PARTICLES,
    SEED_RELAX_MAXITER,
)
from src.services.equilibrium.continuation import converge_at, walk_branch
from src.services.equilibrium.free_energy import solution_from_params
from src.services.equilibrium.newton import newton_solve
from src.services.equilibrium.riemann_hilbert import two_cut_boundary_residuals
from src.services.equilibrium.self_consistent import effective_potential
from src.utils import (
    BaseAppException,
    ModelDomainError,
    NumericalError,
    SeedFailureError,
    format_structured_log,
    get_logger,
)

logger = get_logger(__name__)


# Symmetric seeds


def _symmetric_seed(model: GeometryModel, ansatz: Ansatz, g: float, newton_options) -> EquilibriumSolution:
    if ansatz is Ansatz.SYM1:
        closed, _ = solve_one_cut_01(g)
        start = CandidateParams(ansatz, (closed.b,), Moments(0.0, closed.m2, 0.0))
        return converge_at(model, g, ansatz, start, newton_options=newton_options)[0]

    closed, density = solve_two_cut_01(g)
    params = CandidateParams(ansatz, (closed.a, closed.b), Moments(0.0, closed.m2, 0.0))
    if closed.a == 0.0:
        # the gap has closed; the 2-cut equations degenerate and the closed form is exact
        return solution_from_params(model, g, params, density)
    return converge_at(model, g, ansatz, params, newton_options=newton_options)[0]


def _asym1_seed(g: float, newton_options) -> EquilibriumSolution:
    closed, _ = solve_one_cut_01(g)
    start = CandidateParams(Ansatz.ASYM1, (-closed.b, closed.b), Moments(0.0, closed.m2, 0.0))
    return converge_at(GeometryModel.PLUS, g, Ansatz.ASYM1, start, newton_options=newton_options)[0]


# Broken-symmetry seeds


def _relaxation_energy(x: np.ndarray, g: float) -> Tuple[float, np.ndarray]:
    n = x.size
    sums = PowerSums.from_values(x)
    energy = action_from_power_sums(sums, n, GeometryModel.PLUS, g) - 2.0 / n ** 2 * log_repulsion(x)
    return energy, coulomb_energy_gradient(x, GeometryModel.PLUS, g)


def relaxed_gas(g: float, particles: int, left_fraction: float, maxiter: int = SEED_RELAX_MAXITER):
    """
    Local minimum of the finite-N Coulomb energy with a fraction of the
    particles started in the left well.

    Returns:
        Sorted eigenvalues and the energy reached
    """
    well = math.sqrt(max(-g / 2.0, 0.25))
    n_left = max(2, int(round(left_fraction * particles)))
    n_right = particles - n_left
    x0 = np.concatenate((
        -well + 0.3 * well * np.linspace(-1.0, 1.0, n_left),
        well + 0.6 * well * np.linspace(-1.0, 1.0, n_right),
    ))
    result = minimize(
        _relaxation_energy, x0, args=(g,), jac=True, method="L-BFGS-B",
        options={"maxiter": maxiter},
    )
    return np.sort(result.x), float(result.fun)


def candidate_from_gas(values: np.ndarray) -> CandidateParams:
    """Split a sorted configuration at its widest gap and read off edges and moments."""
    values = np.sort(np.asarray(values, dtype=float))
    split = int(np.argmax(np.diff(values))) + 1
    left, right = values[:split], values[split:]

    def padded(cluster):
        pad = 0.5 * (cluster[-1] - cluster[0]) / max(len(cluster) - 1, 1)
        return cluster[0] - pad, cluster[-1] + pad

    a1, b1 = padded(left)
    a2, b2 = padded(right)
    m1 = float(values.mean())
    moments = Moments(m1, float(np.mean(values ** 2)), float(np.mean(values ** 3)))
    return CandidateParams(Ansatz.ASYM2, (a1, b1, a2, b2), moments)


def _staged_newton(g: float, start: CandidateParams, newton_options) -> EquilibriumSolution:
    """Edges at frozen moments first, then the full seven-condition system."""
    w = effective_potential(GeometryModel.PLUS, g, start.moments)
    options = dict(newton_options or {}, tol=1e-10)
    gap_nodes = options.pop("gap_nodes", DEFAULT_GAP_NODES)

    def edges_only(x):
        return np.asarray(two_cut_boundary_residuals(w, TwoCutSupport(*x), gap_nodes))

    def ordered(x):
        return bool(np.all(np.isfinite(x)) and np.all(np.diff(x) > 0.0))

    edges = newton_solve(
        edges_only, np.array(start.support), admissible=ordered, **options
    )
    staged = CandidateParams(Ansatz.ASYM2, tuple(edges.x), start.moments)
    return converge_at(GeometryModel.PLUS, g, Ansatz.ASYM2, staged, newton_options=newton_options)[0]


def _broken(solution: EquilibriumSolution) -> Optional[EquilibriumSolution]:
    if solution.moments.m1 < -BROKEN_MIN_M1:
        solution = solution.mirrored()
    return solution if solution.moments.m1 > BROKEN_MIN_M1 else None


def _from_relaxation(g: float, newton_options, particles: int = SEED_PARTICLES) -> Optional[EquilibriumSolution]:
    gases = []
    for fraction in SEED_LEFT_FRACTIONS:
        try:
            gases.append(relaxed_gas(g, particles, fraction))
        except (ArithmeticError, ValueError, BaseAppException) as e:
            logger.debug(f"Relaxation with left fraction {fraction} failed: {e}")
    for values, energy in sorted(gases, key=lambda item: item[1]):
        try:
            solution = _broken(_staged_newton(g, candidate_from_gas(values), newton_options))
        except (NumericalError, ModelDomainError) as e:
            logger.debug(f"Relaxed gas (E={energy:.6g}) did not converge: {e.code.name}")
            continue
        if solution is not None:
            return solution
    return None


def _from_anchor(g: float, newton_options) -> Optional[EquilibriumSolution]:
    anchor_g = min(BROKEN_BRANCH_ANCHORS, key=lambda a: abs(a - g))
    values = BROKEN_BRANCH_ANCHORS[anchor_g]
    params = CandidateParams(Ansatz.ASYM2, values[:4], Moments(*values[4:]))
    start = converge_at(GeometryModel.PLUS, anchor_g, Ansatz.ASYM2, params, newton_options=newton_options)[0]
    if anchor_g == g:
        return _broken(start)
    reached, _ = walk_branch(
        GeometryModel.PLUS, Ansatz.ASYM2, start, [g], newton_options=newton_options
    )
    return _broken(reached[-1]) if reached else None


def heuristic_broken_seed(g: float) -> CandidateParams:
    """Edges around the wells of 2x^4 + 2g x^2 with moments of a lopsided two-point mass."""
    well = math.sqrt(-g / 2.0)
    m1 = 0.6 * well
    m2 = -g / 4.0
    m3 = m1 ** 3 + 1.5 * m1 * (m2 - m1 ** 2)
    support = (-well - 0.3, -well + 0.15, well - 0.35, well + 0.35)
    return CandidateParams(Ansatz.ASYM2, support, Moments(m1, m2, m3))


def _from_heuristic(g: float, newton_options) -> Optional[EquilibriumSolution]:
    start = heuristic_broken_seed(g)
    return _broken(converge_at(GeometryModel.PLUS, g, Ansatz.ASYM2, start, newton_options=newton_options)[0])


def broken_branch_solution(
    g: float,
    newton_options: Optional[dict] = None,
    particles: int = SEED_PARTICLES,
) -> EquilibriumSolution:
    """
    Converged broken-symmetry (1,0) solution with m1 > 0 at g.

    Raises:
        SeedFailureError: no strategy converged
    """
    if g >= 0.0:
        raise SeedFailureError("Broken-symmetry branch needs g < 0", details={"g": g})

    strategies: List[Tuple[str, Callable]] = [
        ("relaxation", lambda g_, options: _from_relaxation(g_, options, particles)),
        ("anchor", _from_anchor),
        ("heuristic", _from_heuristic),
    ]
    failures = {}
    for name, strategy in strategies:
        try:
            solution = strategy(g, newton_options)
        except (NumericalError, ModelDomainError) as e:
            failures[name] = e.code.name
            continue
        if solution is None:
            failures[name] = "no broken solution"
            continue
        logger.info(
            format_structured_log(
                "Broken-symmetry seed converged",
                {
                    "g": g,
                    "strategy": name,
                    "edges": list(solution.params.support),
                    "m1": solution.moments.m1,
                    "residual_norm": solution.residual_norm,
                }
            )
        )
        return solution
    logger.warning(format_structured_log("Broken-symmetry seeding failed", {"g": g, "failures": failures}))
    raise SeedFailureError(
        "No broken-symmetry solution found", details={"g": g, "failures": failures}
    )


def seed_broken_branch(g: float, newton_options: Optional[dict] = None) -> CandidateParams:
    return broken_branch_solution(g, newton_options).params


def initial_solution(
    model: GeometryModel,
    ansatz: Ansatz,
    g: float,
    newton_options: Optional[dict] = None,
) -> EquilibriumSolution:
    """
    Converged solution of one ansatz at g, seeded without continuation.

    Raises:
        SeedFailureError: the branch has no solution at g or seeding failed
    """
    try:
        if ansatz.symmetric:
            return _symmetric_seed(model, ansatz, g, newton_options)
        if model is not GeometryModel.PLUS:
            raise ModelDomainError(
                "Asymmetric solutions are sought for the (1,0) model only",
                details={"model": model.value}
            )
        if ansatz is Ansatz.ASYM1:
            return _asym1_seed(g, newton_options)
        return broken_branch_solution(g, newton_options)
    except SeedFailureError:
        raise
    except (NumericalError, ModelDomainError) as e:
        raise SeedFailureError(
            f"No {ansatz.value} seed at g={g}",
            details={"model": model.value, "g": g, "boundary": CRITICAL_COUPLING_01},
            original_exception=e
        )
