"""
Tests for Lagrange multipliers, free energies and equilibrium selection.
"""

import numpy as np
import pytest

from src.enums import Ansatz, GeometryModel
from src.models import CandidateParams, Moments
from src.services.equilibrium import (
    direct_free_energy,
    free_energy_of,
    gaussian_baseline_density,
    initial_solution,
    lagrange_multiplier,
    select_equilibrium,
    solve_one_cut_01,
    solve_two_cut_01,
    symmetric_free_energy_01,
    symmetrized_density,
    variational_margin,
    walk_branch,
)
from src.services.equilibrium.free_energy import lagrange_profile, multiplier_points, solution_from_params
from src.utils import ErrorCode, PreconditionError, SelectionError

from conftest import CRITICAL_01

GUE = GeometryModel.GAUSSIAN_BASELINE
SEMICIRCLE_MOMENTS = Moments(0.0, 1.0, 0.0)


def test_gaussian_baseline_lagrange_multiplier():
    density = gaussian_baseline_density()
    assert lagrange_multiplier(GUE, 0.0, density, SEMICIRCLE_MOMENTS, 0.0) == pytest.approx(1.0, abs=1e-8)
    ell, spread = lagrange_profile(GUE, 0.0, density, SEMICIRCLE_MOMENTS)
    assert ell == pytest.approx(1.0, abs=1e-8)
    assert spread < 1e-8


def test_gaussian_baseline_free_energy():
    density = gaussian_baseline_density()
    assert free_energy_of(GUE, 0.0, density, SEMICIRCLE_MOMENTS) == pytest.approx(0.75, abs=1e-8)
    assert direct_free_energy(GUE, 0.0, density) == pytest.approx(0.75, abs=1e-6)


def test_lagrange_multiplier_needs_interior_point():
    density = gaussian_baseline_density()
    with pytest.raises(PreconditionError):
        lagrange_multiplier(GUE, 0.0, density, SEMICIRCLE_MOMENTS, 3.0)


def test_variational_margin_non_negative_off_support():
    density = gaussian_baseline_density()
    margin = variational_margin(GUE, 0.0, density, SEMICIRCLE_MOMENTS, 1.0, [-4.0, -2.5, 2.5, 4.0])
    assert np.all(margin >= -1e-10)
    with pytest.raises(PreconditionError):
        variational_margin(GUE, 0.0, density, SEMICIRCLE_MOMENTS, 1.0, [0.0])


def test_two_cut_free_energy_matches_closed_form():
    solution = initial_solution(GeometryModel.MINUS, Ansatz.SYM2, -7.0)
    assert solution.free_energy == pytest.approx(symmetric_free_energy_01(-7.0), abs=1e-7)
    assert solution.free_energy == pytest.approx(-5.2301396146, abs=1e-7)
    assert solution.lagrange_spread < 1e-6


def test_direct_route_agrees_with_lagrange_route():
    solution = initial_solution(GeometryModel.MINUS, Ansatz.SYM1, 0.0)
    direct = direct_free_energy(GeometryModel.MINUS, 0.0, solution.density)
    assert direct == pytest.approx(solution.free_energy, abs=1e-6)


def test_phases_degenerate_at_critical_coupling():
    one, one_density = solve_one_cut_01(CRITICAL_01)
    two, two_density = solve_two_cut_01(CRITICAL_01)
    e_one = free_energy_of(GeometryModel.MINUS, CRITICAL_01, one_density, Moments(0.0, one.m2, 0.0))
    e_two = free_energy_of(GeometryModel.MINUS, CRITICAL_01, two_density, Moments(0.0, two.m2, 0.0))
    assert e_one == pytest.approx(e_two, abs=1e-8)
    assert e_two == pytest.approx(symmetric_free_energy_01(CRITICAL_01), abs=1e-8)


def test_selection_flags_degeneracy():
    one, one_density = solve_one_cut_01(CRITICAL_01)
    two, two_density = solve_two_cut_01(CRITICAL_01)
    candidates = [
        solution_from_params(
            GeometryModel.MINUS, CRITICAL_01,
            CandidateParams(Ansatz.SYM1, (one.b,), Moments(0.0, one.m2, 0.0)), one_density,
        ),
        solution_from_params(
            GeometryModel.MINUS, CRITICAL_01,
            CandidateParams(Ansatz.SYM2, (two.a, two.b), Moments(0.0, two.m2, 0.0)), two_density,
        ),
    ]
    selection = select_equilibrium(GeometryModel.MINUS, CRITICAL_01, candidates, degeneracy_tol=1e-7)
    assert selection.degenerate
    assert not selection.broken
    assert selection.runner_up is not None


def test_selection_without_candidates():
    with pytest.raises(SelectionError) as exc_info:
        select_equilibrium(GeometryModel.PLUS, -4.0, [])
    assert exc_info.value.code is ErrorCode.EMPTY_CANDIDATES


def test_symmetrized_density_is_even():
    density = gaussian_baseline_density()
    grid = np.linspace(-2.0, 2.0, 11)
    assert symmetrized_density(density, grid) == pytest.approx(density(grid))


@pytest.mark.slow
def test_broken_phase_beats_symmetric_phase():
    broken = initial_solution(GeometryModel.PLUS, Ansatz.ASYM2, -5.0)
    symmetric = initial_solution(GeometryModel.PLUS, Ansatz.SYM1, -5.0)
    assert broken.moments.m1 > 0.05
    assert broken.free_energy < symmetric.free_energy
    assert broken.lagrange_spread < 1e-6

    selection = select_equilibrium(GeometryModel.PLUS, -5.0, [symmetric, broken.mirrored()])
    assert selection.chosen.ansatz is Ansatz.ASYM2
    assert selection.broken
    assert selection.chosen.moments.m1 > 0.0


@pytest.mark.slow
def test_mirrored_broken_solution_has_same_free_energy():
    broken = initial_solution(GeometryModel.PLUS, Ansatz.ASYM2, -5.0)
    mirrored = broken.mirrored()
    energy = free_energy_of(GeometryModel.PLUS, -5.0, mirrored.density, mirrored.moments)
    assert energy == pytest.approx(broken.free_energy, abs=1e-8)
    x = np.linspace(-2.5, 2.5, 101)
    assert mirrored.density(x) == pytest.approx(broken.density(-x), abs=1e-10)


def test_multiplier_points_cover_every_cut():
    _, one_density = solve_one_cut_01(-2.0)
    points = multiplier_points(one_density)
    assert len(points) == 5
    assert len(set(points)) == 5
    assert all(one_density.contains(p) for p in points)

    _, two_density = solve_two_cut_01(-7.0)
    points = multiplier_points(two_density)
    assert sum(p < 0 for p in points) == 5
    assert sum(p > 0 for p in points) == 5
    assert all(two_density.contains(p) for p in points)


def test_one_cut_spread_detects_non_equilibrium_density():
    """The semicircle is not an equilibrium of the (0,1) model, and l varies across its support."""
    _, spread = lagrange_profile(GeometryModel.MINUS, 0.0, gaussian_baseline_density(), SEMICIRCLE_MOMENTS)
    assert spread > 1e-3


def test_one_cut_lagrange_multiplier_is_constant():
    solution = initial_solution(GeometryModel.MINUS, Ansatz.SYM1, 0.0)
    assert solution.lagrange_spread < 1e-9


def symmetric_energy(g):
    """Free energy of the symmetric (1,0) phase; it coincides with the (0,1) one."""
    if g >= CRITICAL_01:
        return initial_solution(GeometryModel.MINUS, Ansatz.SYM1, g).free_energy
    return symmetric_free_energy_01(g)


@pytest.mark.slow
def test_broken_branch_wins_below_the_crossing():
    """Between the crossing and -4 sqrt(2) the symmetric phase is 1-cut, below it 2-cut."""
    start = initial_solution(GeometryModel.PLUS, Ansatz.ASYM2, -4.0)
    upward = [round(-3.9 + 0.1 * k, 10) for k in range(8)]
    downward = [round(-4.1 - 0.1 * k, 10) for k in range(30)]
    solutions = [start]
    for targets in (upward, downward):
        reached, end = walk_branch(GeometryModel.PLUS, Ansatz.ASYM2, start, targets)
        assert end is None
        solutions.extend(reached)

    assert sorted(s.g for s in solutions) == pytest.approx(sorted([-4.0] + upward + downward))
    for solution in solutions:
        assert solution.moments.m1 > 0.0
        assert solution.residual_norm < 1e-12
        assert solution.lagrange_spread < 1e-6
        assert solution.free_energy < symmetric_energy(solution.g)
