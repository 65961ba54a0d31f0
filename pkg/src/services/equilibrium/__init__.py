"""
Large-N equilibrium measures: closed forms, Riemann-Hilbert densities,
self-consistent solves, free energies and critical couplings.
"""

from src.services.equilibrium.closed_form import (
    critical_density,
    gaussian_baseline_density,
    solve_one_cut_01,
    solve_two_cut_01,
    symmetric_free_energy_01,
)
from src.services.equilibrium.continuation import BranchScan, branch_scan, converge_at, walk_branch
from src.services.equilibrium.critical import locate_critical
from src.services.equilibrium.equilibrium_manager import EquilibriumManager
from src.services.equilibrium.free_energy import (
    direct_free_energy,
    free_energy_of,
    lagrange_multiplier,
    select_equilibrium,
    symmetrized_density,
    variational_margin,
)
from src.services.equilibrium.newton import newton_solve
from src.services.equilibrium.riemann_hilbert import (
    analytic_borel_transform,
    borel_transform,
    density_moment,
    moment_extraction,
)
from src.services.equilibrium.self_consistent import (
    build_system,
    effective_potential,
    residuals_10_one_cut,
    residuals_10_two_cut,
    residuals_10_two_cut_reduced,
)
from src.services.equilibrium.seeding import initial_solution, seed_broken_branch

__all__ = [
    "EquilibriumManager",
    "critical_density",
    "gaussian_baseline_density",
    "solve_one_cut_01",
    "solve_two_cut_01",
    "symmetric_free_energy_01",
    "BranchScan",
    "branch_scan",
    "converge_at",
    "walk_branch",
    "locate_critical",
    "direct_free_energy",
    "free_energy_of",
    "lagrange_multiplier",
    "select_equilibrium",
    "symmetrized_density",
    "variational_margin",
    "newton_solve",
    "analytic_borel_transform",
    "borel_transform",
    "density_moment",
    "moment_extraction",
    "build_system",
    "effective_potential",
    "residuals_10_one_cut",
    "residuals_10_two_cut",
    "residuals_10_two_cut_reduced",
    "initial_solution",
    "seed_broken_branch",
]
