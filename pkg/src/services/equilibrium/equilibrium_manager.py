"""
Equilibrium manager: solves every applicable candidate at a coupling,
selects the equilibrium, scans couplings and locates critical points.
"""

import uuid
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from config.config import Settings, get_settings
from src.enums import Ansatz, ErrorCode, GeometryModel, RunStatus, SolveStatus
from src.models import (
    CandidateParams,
    EquilibriumSolution,
    Moments,
    PhaseEntry,
    PhaseReport,
    PhaseRow,
    SolutionReport,
)
from src.services.equilibrium.closed_form import gaussian_baseline_density
from src.services.equilibrium.config import (
    ASYM2_SEARCH_MAX_G,
    CRITICAL_COUPLING_01,
    CRITICAL_MATCH_TOL,
)
from src.services.equilibrium.continuation import scan_grid, walk_branch
from src.services.equilibrium.critical import interpolated_crossing, locate_critical
from src.services.equilibrium.free_energy import (
    Selection,
    select_equilibrium,
    solution_from_params,
    symmetrized_density,
)
from src.services.equilibrium.riemann_hilbert import density_moments
from src.services.equilibrium.seeding import broken_branch_solution, initial_solution
from src.utils import (
    ModelDomainError,
    NumericalError,
    SelectionError,
    format_structured_log,
    get_logger,
    log_function_call,
)

logger = get_logger(__name__)


class EquilibriumManager:
    """
    Manager for large-N equilibrium measures of the (1,0) and (0,1) ensembles.
    Numerical options come from the application settings.
    """

    def __init__(self, settings: Optional[Settings] = None, reduced: bool = False):
        """
        Initialize the equilibrium manager.

        Args:
            settings: Settings to use (defaults to the cached application settings)
            reduced: Solve the broken-symmetry branch with the four-edge system
        """
        self.instance_id = str(uuid.uuid4())[:8]
        logger.info(f"Initializing EquilibriumManager instance {self.instance_id}")

        self.settings = settings or get_settings()
        self.reduced = reduced
        self.newton_options = {
            "tol": self.settings.NEWTON_TOL,
            "max_iter": self.settings.NEWTON_MAX_ITER,
            "max_halvings": self.settings.NEWTON_MAX_HALVINGS,
            "fd_step": self.settings.NEWTON_FD_STEP,
            "cond_limit": self.settings.NEWTON_COND_LIMIT,
            "gap_nodes": self.settings.GAP_QUADRATURE_NODES,
        }

        logger.debug(
            format_structured_log(
                "EquilibriumManager initialized",
                {
                    "instance_id": self.instance_id,
                    "reduced": reduced,
                    "newton_options": self.newton_options,
                }
            )
        )

    # Candidates at one coupling

    @staticmethod
    def applicable_ansatze(model: GeometryModel, g: float) -> List[Ansatz]:
        """Candidate branches worth solving for at g."""
        if model is GeometryModel.GAUSSIAN_BASELINE:
            return [Ansatz.SYM1]
        ansatze = []
        if g >= CRITICAL_COUPLING_01 - CRITICAL_MATCH_TOL:
            ansatze.append(Ansatz.SYM1)
        if g <= CRITICAL_COUPLING_01 + CRITICAL_MATCH_TOL:
            ansatze.append(Ansatz.SYM2)
        if model is GeometryModel.PLUS and g <= ASYM2_SEARCH_MAX_G:
            ansatze.append(Ansatz.ASYM2)
        return ansatze

    def solve_candidate(self, model: GeometryModel, g: float, ansatz: Ansatz) -> EquilibriumSolution:
        """
        Converged solution of one ansatz at g.

        Raises:
            SeedFailureError: no solution on this branch at g
            ModelDomainError: ansatz not available for the model
        """
        if model is GeometryModel.GAUSSIAN_BASELINE:
            if ansatz is not Ansatz.SYM1:
                raise ModelDomainError(
                    "The Gaussian baseline has the semicircle only",
                    code=ErrorCode.UNSUPPORTED_MODEL,
                    details={"ansatz": ansatz.value}
                )
            params = CandidateParams(Ansatz.SYM1, (2.0,), Moments(0.0, 1.0, 0.0))
            return solution_from_params(model, 0.0, params, gaussian_baseline_density())
        if ansatz is Ansatz.ASYM2 and model is GeometryModel.PLUS:
            return broken_branch_solution(
                g, self.newton_options, particles=self.settings.SEED_PARTICLES
            )
        return initial_solution(model, ansatz, g, newton_options=self.newton_options)

    def solve_all(
        self,
        model: GeometryModel,
        g: float,
        ansatze: Optional[Sequence[Ansatz]] = None,
    ) -> Tuple[PhaseEntry, Selection]:
        """
        Solve every requested (default: applicable) ansatz and select the equilibrium.

        Raises:
            SelectionError: no candidate converged (ALL_BRANCHES_FAILED)
        """
        ansatze = list(ansatze) if ansatze else self.applicable_ansatze(model, g)
        entry = PhaseEntry(g=g)
        for ansatz in ansatze:
            try:
                entry.candidates[ansatz] = self.solve_candidate(model, g, ansatz)
            except (NumericalError, ModelDomainError) as e:
                entry.failures[ansatz] = e.code.name
                logger.warning(
                    format_structured_log(
                        "Candidate failed",
                        {"model": model.value, "g": g, "ansatz": ansatz.value, "error": e.code.name}
                    )
                )

        if not entry.candidates:
            raise SelectionError(
                "No candidate branch converged",
                code=ErrorCode.ALL_BRANCHES_FAILED,
                details={"model": model.value, "g": g, "failures": {a.value: f for a, f in entry.failures.items()}}
            )
        selection = select_equilibrium(model, g, list(entry.candidates.values()))
        entry.chosen = selection.chosen.ansatz
        entry.degenerate = selection.degenerate
        entry.candidates[selection.chosen.ansatz] = selection.chosen
        return entry, selection

    def closure_error(self, solution: EquilibriumSolution) -> float:
        """Largest difference between the candidate's moments and those of its density."""
        measured = density_moments(solution.density, nodes=self.settings.QUADRATURE_NODES)
        return float(np.max(np.abs(np.subtract(measured.as_tuple(), solution.moments.as_tuple()))))

    def solution_report(self, solution: EquilibriumSolution, chosen: bool = False) -> SolutionReport:
        m4 = density_moments(solution.density, nodes=self.settings.QUADRATURE_NODES).m4
        return SolutionReport(
            model=solution.model.value,
            g=solution.g,
            ansatz=solution.ansatz.value,
            support=list(solution.edges),
            m1=solution.moments.m1,
            m2=solution.moments.m2,
            m3=solution.moments.m3,
            m4=m4,
            ell=solution.lagrange,
            free_energy=solution.free_energy,
            residual_norm=solution.residual_norm,
            chosen=chosen,
        )

    @log_function_call(logger)
    def run_equilibrium(
        self,
        model: GeometryModel,
        g: float,
        ansatz: Optional[Ansatz] = None,
    ) -> Dict[str, Any]:
        """
        Solve and select the equilibrium at g, sampling the chosen density.

        Args:
            model: Ensemble
            g: Coupling constant
            ansatz: Restrict to one branch (None solves every applicable one)

        Returns:
            Dictionary with the selection, candidate reports and density samples

        Raises:
            SelectionError: every branch failed
        """
        logger.info(
            format_structured_log(
                "Starting equilibrium solve",
                {"model": model.value, "g": g, "ansatz": ansatz.value if ansatz else "auto"}
            )
        )
        entry, selection = self.solve_all(model, g, [ansatz] if ansatz else None)
        chosen = selection.chosen

        grid = np.linspace(chosen.density.lower, chosen.density.upper, self.settings.DENSITY_SAMPLE_POINTS)
        result: Dict[str, Any] = {
            "status": RunStatus.COMPLETED.value if not entry.failures else RunStatus.PARTIAL.value,
            "model": model.value,
            "g": g,
            "selection": selection,
            "entry": entry,
            "reports": [
                self.solution_report(s, chosen=(a is entry.chosen))
                for a, s in entry.candidates.items()
            ],
            "failures": {a.value: f for a, f in entry.failures.items()},
            "grid": grid,
            "density": chosen.density(grid),
            "closure_error": self.closure_error(chosen),
        }
        if selection.broken:
            span = max(abs(chosen.density.lower), abs(chosen.density.upper))
            symmetric_grid = np.linspace(-span, span, self.settings.DENSITY_SAMPLE_POINTS)
            result["symmetrized_grid"] = symmetric_grid
            result["symmetrized_density"] = symmetrized_density(chosen.density, symmetric_grid)

        logger.info(
            format_structured_log(
                "Equilibrium selected",
                {
                    "model": model.value,
                    "g": g,
                    "ansatz": chosen.ansatz.value,
                    "free_energy": chosen.free_energy,
                    "m1": chosen.moments.m1,
                    "degenerate": selection.degenerate,
                    "closure_error": result["closure_error"],
                }
            )
        )
        return result

    # Scans

    def _broken_branch_over(self, grid: List[float], entries: Dict[float, PhaseEntry]) -> None:
        """Follow the broken branch upward from the most negative grid point."""
        targets = sorted(g for g in grid if g <= ASYM2_SEARCH_MAX_G)
        if not targets:
            return
        try:
            start = broken_branch_solution(
                targets[0], self.newton_options, particles=self.settings.SEED_PARTICLES
            )
        except (NumericalError, ModelDomainError) as e:
            for g in targets:
                entries[g].failures[Ansatz.ASYM2] = e.code.name
            return

        entries[targets[0]].candidates[Ansatz.ASYM2] = start
        reached, end = walk_branch(
            GeometryModel.PLUS, Ansatz.ASYM2, start, targets[1:],
            reduced=self.reduced,
            min_step=self.settings.CONTINUATION_MIN_STEP,
            newton_options=self.newton_options,
        )
        for solution in reached:
            entries[solution.g].candidates[Ansatz.ASYM2] = solution
        for g in targets[1 + len(reached):]:
            entries[g].failures[Ansatz.ASYM2] = SolveStatus.BRANCH_END.value
        if end is not None:
            logger.info(f"Broken-symmetry branch ends at g={end:.6g}")

    @log_function_call(logger)
    def scan(
        self,
        model: GeometryModel,
        g_from: float,
        g_to: float,
        step: float,
    ) -> PhaseReport:
        """
        Solve every applicable branch across a grid of couplings.

        Symmetric branches are seeded independently at each g from the closed
        forms; the broken-symmetry branch is path-followed. Per-g failures are
        recorded in the entries rather than raised.

        Raises:
            PreconditionError: zero step or a step pointing away from g_to
        """
        grid = scan_grid(g_from, g_to, step)
        entries = {g: PhaseEntry(g=g) for g in grid}
        logger.info(
            format_structured_log(
                "Starting coupling scan",
                {"model": model.value, "g_from": g_from, "g_to": g_to, "step": step, "points": len(grid)}
            )
        )

        for g in grid:
            for ansatz in self.applicable_ansatze(model, g):
                if ansatz is Ansatz.ASYM2:
                    continue
                try:
                    entries[g].candidates[ansatz] = self.solve_candidate(model, g, ansatz)
                except (NumericalError, ModelDomainError) as e:
                    entries[g].failures[ansatz] = e.code.name

        if model is GeometryModel.PLUS:
            self._broken_branch_over(grid, entries)

        report = PhaseReport(model=model)
        gaps = {}
        for g in grid:
            entry = entries[g]
            if entry.candidates:
                selection = select_equilibrium(model, g, list(entry.candidates.values()))
                entry.chosen = selection.chosen.ansatz
                entry.degenerate = selection.degenerate
                entry.candidates[entry.chosen] = selection.chosen
            if Ansatz.SYM1 in entry.candidates and Ansatz.ASYM2 in entry.candidates:
                gaps[g] = entry.candidates[Ansatz.SYM1].free_energy - entry.candidates[Ansatz.ASYM2].free_energy
            report.entries.append(entry)

        lo, hi = min(grid), max(grid)
        if model is GeometryModel.MINUS and lo <= CRITICAL_COUPLING_01 <= hi:
            report.critical.append(CRITICAL_COUPLING_01)
        elif model is GeometryModel.PLUS:
            report.critical.extend(interpolated_crossing(gaps))

        logger.info(
            format_structured_log(
                "Coupling scan finished",
                {
                    "model": model.value,
                    "points": len(grid),
                    "failures": sum(len(e.failures) for e in report.entries),
                    "critical": report.critical,
                }
            )
        )
        return report

    @staticmethod
    def phase_rows(report: PhaseReport) -> List[PhaseRow]:
        """One row per (g, ansatz): converged candidates and recorded failures."""
        rows = []
        for entry in report.entries:
            for ansatz, solution in entry.candidates.items():
                edges = list(solution.edges)
                if len(edges) == 2:
                    edges = [None, None] + edges
                rows.append(PhaseRow(
                    g=entry.g,
                    ansatz=ansatz.value,
                    status=SolveStatus.CONVERGED.value,
                    a1=edges[0], b1=edges[1], a2=edges[2], b2=edges[3],
                    m1=solution.moments.m1,
                    m2=solution.moments.m2,
                    m3=solution.moments.m3,
                    ell=solution.lagrange,
                    free_energy=solution.free_energy,
                    chosen=ansatz is entry.chosen,
                ))
            for ansatz, failure in entry.failures.items():
                status = failure if failure == SolveStatus.BRANCH_END.value else SolveStatus.FAILED.value
                rows.append(PhaseRow(g=entry.g, ansatz=ansatz.value, status=status))
        return rows

    # Critical couplings

    def critical(
        self,
        model: GeometryModel,
        g_lo: Optional[float] = None,
        g_hi: Optional[float] = None,
    ) -> Dict[str, Any]:
        """
        Locate the critical coupling in [g_lo, g_hi].

        Raises:
            NoSignChangeError: no transition in the bracket
        """
        value = locate_critical(
            model, g_lo, g_hi,
            tol=self.settings.CRITICAL_TOL,
            newton_options=self.newton_options,
        )
        return {
            "status": RunStatus.COMPLETED.value,
            "model": model.value,
            "bracket": [g_lo, g_hi],
            "critical": value,
            "tolerance": 0.0 if model is GeometryModel.MINUS else self.settings.CRITICAL_TOL,
        }
