"""
Critical couplings: where the equilibrium changes branch.

For (0,1) the symmetric 1-cut and 2-cut solutions meet at the analytic
boundary -4 sqrt(2). For (1,0) the transition is the crossing of the free
energies of the symmetric 1-cut branch and the broken-symmetry 2-cut
branch; the broken branch is followed from the lower end of the bracket
and ends at its fold, which caps the search interval.
"""

from typing import Dict, List, Optional, Tuple

from scipy.optimize import brentq

from src.enums import Ansatz, ErrorCode, GeometryModel
from src.models import EquilibriumSolution
from src.services.equilibrium.config import (
    BROKEN_MIN_M1,
    CRITICAL_COUPLING_01,
    CRITICAL_SCAN_STEP,
    CRITICAL_TOL,
    DEFAULT_CRITICAL_BRACKET_10,
)
from src.services.equilibrium.continuation import converge_at, scan_grid, walk_branch
from src.services.equilibrium.seeding import broken_branch_solution, initial_solution
from src.utils import (
    ModelDomainError,
    NoSignChangeError,
    NumericalError,
    SeedFailureError,
    format_structured_log,
    get_logger,
)

logger = get_logger(__name__)


def _critical_01(g_lo: float, g_hi: float) -> float:
    if not g_lo <= CRITICAL_COUPLING_01 <= g_hi:
        raise NoSignChangeError(
            "The (0,1) branch boundary lies outside the bracket",
            details={"bracket": [g_lo, g_hi], "boundary": CRITICAL_COUPLING_01}
        )
    return CRITICAL_COUPLING_01


class _EnergyGap:
    """E(symmetric 1-cut) - E(broken 2-cut) along the broken branch."""

    def __init__(self, newton_options: Optional[dict]):
        self.newton_options = newton_options
        self.branch: List[EquilibriumSolution] = []

    def symmetric_energy(self, g: float) -> float:
        return initial_solution(
            GeometryModel.PLUS, Ansatz.SYM1, g, newton_options=self.newton_options
        ).free_energy

    def broken_energy(self, g: float) -> float:
        nearest = min(self.branch, key=lambda s: abs(s.g - g))
        solution, _ = converge_at(
            GeometryModel.PLUS, g, Ansatz.ASYM2, nearest.params, newton_options=self.newton_options
        )
        if solution.moments.m1 < BROKEN_MIN_M1:
            raise SeedFailureError(
                "Broken branch collapsed onto the symmetric solution",
                details={"g": g, "m1": solution.moments.m1}
            )
        return solution.free_energy

    def __call__(self, g: float) -> float:
        return self.symmetric_energy(g) - self.broken_energy(g)

    def walk(self, g_lo: float, g_hi: float, step: float) -> Tuple[List[Tuple[float, float]], Optional[float]]:
        """Energy gaps on the grid reached by the broken branch, and its end."""
        start = broken_branch_solution(g_lo, self.newton_options)
        grid = scan_grid(g_lo, g_hi, step)
        reached, end = walk_branch(
            GeometryModel.PLUS, Ansatz.ASYM2, start, grid[1:], newton_options=self.newton_options
        )
        self.branch = [start] + reached
        gaps = [(s.g, self.symmetric_energy(s.g) - s.free_energy) for s in self.branch]
        return gaps, end


def _critical_10(g_lo: float, g_hi: float, tol: float, step: float, newton_options: Optional[dict]) -> float:
    gap = _EnergyGap(newton_options)
    try:
        samples, branch_end = gap.walk(g_lo, g_hi, step)
    except SeedFailureError as e:
        raise NoSignChangeError(
            "No broken-symmetry branch at the lower end of the bracket",
            details={"bracket": [g_lo, g_hi]},
            original_exception=e
        )

    for (g0, d0), (g1, d1) in zip(samples, samples[1:]):
        if d0 == 0.0:
            return g0
        if d0 * d1 < 0.0:
            logger.debug(f"Free-energy crossing bracketed by [{g0:.6g}, {g1:.6g}]")
            try:
                return float(brentq(gap, g0, g1, xtol=0.5 * tol))
            except (NumericalError, ModelDomainError) as e:
                raise NoSignChangeError(
                    "Branches stopped converging inside the crossing bracket",
                    details={"bracket": [g0, g1]},
                    original_exception=e
                )

    raise NoSignChangeError(
        "Free-energy difference does not change sign in the bracket",
        details={
            "bracket": [g_lo, g_hi],
            "branch_end": branch_end,
            "gap_at_ends": [samples[0][1], samples[-1][1]],
        }
    )


def locate_critical(
    model: GeometryModel,
    g_lo: Optional[float] = None,
    g_hi: Optional[float] = None,
    tol: float = CRITICAL_TOL,
    step: float = CRITICAL_SCAN_STEP,
    newton_options: Optional[dict] = None,
) -> float:
    """
    Critical coupling inside [g_lo, g_hi].

    (0,1): the analytic boundary -4 sqrt(2). (1,0): root of
    E(sym1) - E(asym2) to within tol.

    Raises:
        NoSignChangeError: the bracket holds no transition
        ModelDomainError: Gaussian baseline, or g_lo >= g_hi
    """
    if model is GeometryModel.GAUSSIAN_BASELINE:
        raise ModelDomainError(
            "The Gaussian baseline has no phase transition",
            code=ErrorCode.UNSUPPORTED_MODEL,
            details={"model": model.value}
        )
    if model is GeometryModel.MINUS:
        lo = CRITICAL_COUPLING_01 - 1.0 if g_lo is None else g_lo
        hi = CRITICAL_COUPLING_01 + 1.0 if g_hi is None else g_hi
    else:
        lo = DEFAULT_CRITICAL_BRACKET_10[0] if g_lo is None else g_lo
        hi = DEFAULT_CRITICAL_BRACKET_10[1] if g_hi is None else g_hi
    if not lo < hi:
        raise ModelDomainError(
            "Critical search needs g_lo < g_hi",
            code=ErrorCode.PRECONDITION_VIOLATION,
            details={"g_lo": lo, "g_hi": hi}
        )

    if model is GeometryModel.MINUS:
        critical = _critical_01(lo, hi)
    else:
        critical = _critical_10(lo, hi, tol, min(step, 0.25 * (hi - lo)), newton_options)

    logger.info(
        format_structured_log(
            "Critical coupling located",
            {"model": model.value, "bracket": [lo, hi], "critical": critical}
        )
    )
    return critical


def interpolated_crossing(points: Dict[float, float]) -> List[float]:
    """Zeros of a sampled energy difference by linear interpolation between sign changes."""
    ordered = sorted(points.items())
    crossings = []
    for (g0, d0), (g1, d1) in zip(ordered, ordered[1:]):
        if d0 * d1 < 0.0:
            crossings.append(g0 - d0 * (g1 - g0) / (d1 - d0))
    return crossings
