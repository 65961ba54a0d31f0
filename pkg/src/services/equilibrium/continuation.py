"""
Path-following of a solution branch in the coupling g.
"""

from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

import numpy as np

from src.enums import Ansatz, GeometryModel, SolveStatus
from src.models import CandidateParams, EquilibriumSolution
from src.services.equilibrium.config import (
    BROKEN_MIN_M1,
    CONTINUATION_MIN_STEP,
    DEFAULT_GAP_NODES,
    NEWTON_TOL,
)
from src.services.equilibrium.free_energy import solution_from_params
from src.services.equilibrium.newton import newton_solve
from src.services.equilibrium.self_consistent import (
    build_system,
    density_for_params,
)
from src.utils import (
    ModelDomainError,
    NumericalError,
    PreconditionError,
    SeedFailureError,
    format_structured_log,
    get_logger,
)

logger = get_logger(__name__)


@dataclass
class BranchScan:
    """Solutions on the requested grid and where the branch stopped."""

    model: GeometryModel
    ansatz: Ansatz
    solutions: List[EquilibriumSolution] = field(default_factory=list)
    status: SolveStatus = SolveStatus.CONVERGED
    branch_end: Optional[float] = None


def converge_at(
    model: GeometryModel,
    g: float,
    ansatz: Ansatz,
    start: CandidateParams,
    reduced: bool = False,
    tol: float = NEWTON_TOL,
    newton_options: Optional[dict] = None,
) -> Tuple[EquilibriumSolution, int]:
    """
    Newton solve from `start`, then build and screen the density.

    `newton_options` are passed to newton_solve; a `gap_nodes` entry sets
    the gap quadrature of the (1,0) two-cut system.

    Raises:
        NumericalError: non-convergence, singular Jacobian or negative density
        PreconditionError: start violates the ordering constraints
    """
    options = dict(newton_options or {})
    gap_nodes = options.pop("gap_nodes", DEFAULT_GAP_NODES)
    system = build_system(model, g, ansatz, reduced=reduced, gap_nodes=gap_nodes)
    options.setdefault("tol", tol)
    result = newton_solve(system, system.from_params(start), admissible=system.ordered, **options)
    params = system.to_params(result.x)
    density = density_for_params(model, g, params, check=True)
    return solution_from_params(model, g, params, density, result.residual_norm), result.iterations


def _predict(history: List[Tuple[float, np.ndarray]], g_next: float) -> np.ndarray:
    """Secant predictor from the last two points, constant from one."""
    g1, x1 = history[-1]
    if len(history) < 2:
        return x1
    g0, x0 = history[-2]
    if g1 == g0:
        return x1
    return x1 + (x1 - x0) * (g_next - g1) / (g1 - g0)


def _accept(solution: EquilibriumSolution, require_broken: bool) -> bool:
    return not require_broken or solution.moments.m1 > BROKEN_MIN_M1


def walk_branch(
    model: GeometryModel,
    ansatz: Ansatz,
    start: EquilibriumSolution,
    targets: List[float],
    reduced: bool = False,
    min_step: float = CONTINUATION_MIN_STEP,
    newton_options: Optional[dict] = None,
    on_solution: Optional[Callable[[EquilibriumSolution], None]] = None,
) -> Tuple[List[EquilibriumSolution], Optional[float]]:
    """
    Follow a branch from `start` through the target couplings in order.

    Substeps are halved down to `min_step` when a solve fails; the branch
    ends at the last coupling that converged.

    Returns:
        Solutions at the targets reached, and the branch end (None if all reached)
    """
    require_broken = not ansatz.symmetric
    system = build_system(model, start.g, ansatz, reduced=reduced)
    history = [(start.g, system.from_params(start.params))]
    current = start
    reached = []

    for target in targets:
        step = target - current.g
        while current.g != target:
            g_next = target if abs(target - current.g) <= abs(step) else current.g + step
            candidate_system = build_system(model, g_next, ansatz, reduced=reduced)
            guess = _predict(history, g_next)
            if not candidate_system.ordered(guess):
                guess = history[-1][1]
            try:
                solution, _ = converge_at(
                    model, g_next, ansatz, candidate_system.to_params(guess),
                    reduced=reduced, newton_options=newton_options,
                )
                if not _accept(solution, require_broken):
                    raise SeedFailureError(
                        "Continuation fell onto the symmetric branch",
                        details={"g": g_next, "m1": solution.moments.m1}
                    )
            except (NumericalError, PreconditionError) as e:
                step *= 0.5
                logger.debug(f"Continuation step to g={g_next:.6g} failed ({e.code.name}); step -> {step:.3g}")
                if abs(step) < min_step:
                    logger.warning(
                        format_structured_log(
                            "Branch ends",
                            {"model": model.value, "ansatz": ansatz.value, "branch_end": current.g}
                        )
                    )
                    return reached, current.g
                continue
            current = solution
            history.append((g_next, candidate_system.from_params(solution.params)))
            step *= 2.0
        reached.append(current)
        if on_solution is not None:
            on_solution(current)
    return reached, None


def scan_grid(g_from: float, g_to: float, step: float) -> List[float]:
    """g_from, g_from + step, ... up to and including g_to (within a tenth of a step)."""
    if step == 0 or not np.isfinite(step):
        raise PreconditionError("Scan step must be non-zero", details={"step": step})
    if (g_to - g_from) * step < 0:
        raise PreconditionError(
            "Scan step points away from g_to",
            details={"g_from": g_from, "g_to": g_to, "step": step}
        )
    count = int(np.floor((g_to - g_from) / step + 0.1))
    return [float(g_from + k * step) for k in range(count + 1)]


def branch_scan(
    model: GeometryModel,
    ansatz: Ansatz,
    g_from: float,
    g_to: float,
    step: float,
    seed: Callable[[GeometryModel, Ansatz, float], EquilibriumSolution],
    reduced: bool = False,
    min_step: float = CONTINUATION_MIN_STEP,
    newton_options: Optional[dict] = None,
) -> BranchScan:
    """
    Path-follow one branch across g_from..g_to.

    `seed` produces the converged starting solution at g_from.

    Raises:
        SeedFailureError: no solution at g_from
        PreconditionError: zero step or a step pointing away from g_to
    """
    grid = scan_grid(g_from, g_to, step)
    try:
        start = seed(model, ansatz, grid[0])
    except SeedFailureError:
        raise
    except (NumericalError, ModelDomainError) as e:
        raise SeedFailureError(
            f"No {ansatz.value} solution at g={grid[0]}",
            details={"model": model.value, "g": grid[0]},
            original_exception=e
        )

    scan = BranchScan(model=model, ansatz=ansatz, solutions=[start])
    reached, end = walk_branch(
        model, ansatz, start, grid[1:], reduced=reduced,
        min_step=min_step, newton_options=newton_options,
    )
    scan.solutions.extend(reached)
    if end is not None:
        scan.status = SolveStatus.BRANCH_END
        scan.branch_end = end
    logger.info(
        format_structured_log(
            "Branch scan finished",
            {
                "model": model.value,
                "ansatz": ansatz.value,
                "points": len(scan.solutions),
                "requested": len(grid),
                "branch_end": scan.branch_end,
            }
        )
    )
    return scan
