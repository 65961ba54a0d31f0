"""
Tests for the closed-form symmetric (0,1) solutions and the semicircle.
"""

import math

import numpy as np
import pytest

from src.services.equilibrium import (
    critical_density,
    density_moment,
    gaussian_baseline_density,
    solve_one_cut_01,
    solve_two_cut_01,
    symmetric_free_energy_01,
)
from src.services.equilibrium.closed_form import CRITICAL_EDGE, coupling_of_edge, semicircle_values
from src.utils import OutOfBranchError

from conftest import CRITICAL_01


def test_one_cut_at_zero_coupling():
    closed, density = solve_one_cut_01(0.0)
    assert closed.b == pytest.approx(0.7458139, abs=1e-6)
    assert closed.m2 == pytest.approx(0.1605722, abs=1e-6)
    assert coupling_of_edge(closed.b) == pytest.approx(0.0, abs=1e-12)
    assert density_moment(density, 0) == pytest.approx(1.0, abs=1e-12)
    assert density_moment(density, 2) == pytest.approx(closed.m2, abs=1e-12)


@pytest.mark.parametrize("g", [2.0, -1.0, -3.0, -5.0])
def test_one_cut_is_normalised_and_non_negative(g):
    closed, density = solve_one_cut_01(g)
    x = np.linspace(-closed.b, closed.b, 2001)
    assert np.all(density(x) >= 0.0)
    assert density_moment(density, 0) == pytest.approx(1.0, abs=1e-12)
    assert density_moment(density, 1) == pytest.approx(0.0, abs=1e-14)


def test_two_cut_edges_at_minus_seven():
    closed, density = solve_two_cut_01(-7.0)
    root2 = math.sqrt(2.0)
    assert closed.a == pytest.approx(math.sqrt(7.0 - 4 * root2) / (2 * root2), abs=1e-14)
    assert closed.b == pytest.approx(math.sqrt(7.0 + 4 * root2) / (2 * root2), abs=1e-14)
    assert closed.a == pytest.approx(0.409748, abs=1e-6)
    assert closed.b == pytest.approx(1.257818, abs=1e-6)
    assert closed.m2 == pytest.approx(0.875)
    assert density.edges == pytest.approx((-closed.b, -closed.a, closed.a, closed.b))
    assert density_moment(density, 0) == pytest.approx(1.0, abs=1e-10)
    assert density_moment(density, 2) == pytest.approx(0.875, abs=1e-10)


def test_two_cut_gap_is_empty():
    closed, density = solve_two_cut_01(-8.0)
    gap = np.linspace(-0.99 * closed.a, 0.99 * closed.a, 101)
    assert np.all(density(gap) == 0.0)


def test_symmetric_two_cut_free_energy():
    expected = -49.0 / 8.0 + 3.0 / 8.0 + 0.75 * math.log(2.0)
    assert symmetric_free_energy_01(-7.0) == pytest.approx(expected, abs=1e-14)
    assert symmetric_free_energy_01(-7.0) == pytest.approx(-5.2301396146, abs=1e-9)


def test_branches_meet_at_the_critical_coupling():
    """At -4 sqrt(2) the gap closes and both closed forms give the same density."""
    one, one_density = solve_one_cut_01(CRITICAL_01)
    two, two_density = solve_two_cut_01(CRITICAL_01)
    assert one.b == pytest.approx(CRITICAL_EDGE, abs=1e-12)
    assert two.a == 0.0
    assert one.m2 == pytest.approx(two.m2, abs=1e-12)
    assert one.m2 == pytest.approx(-CRITICAL_01 / 8.0, abs=1e-12)
    x = np.linspace(-CRITICAL_EDGE, CRITICAL_EDGE, 501)
    assert np.allclose(one_density(x), two_density(x), atol=1e-12)
    assert np.allclose(critical_density()(x), two_density(x), atol=1e-14)


def test_one_cut_edge_is_continuous_at_the_boundary():
    closed, _ = solve_one_cut_01(CRITICAL_01 + 1e-9)
    assert closed.b == pytest.approx(CRITICAL_EDGE, abs=1e-4)
    two, _ = solve_two_cut_01(CRITICAL_01 - 1e-9)
    assert two.a < 2e-5


def test_out_of_branch_couplings_raise():
    with pytest.raises(OutOfBranchError):
        solve_one_cut_01(CRITICAL_01 - 1e-3)
    with pytest.raises(OutOfBranchError):
        solve_two_cut_01(CRITICAL_01 + 1e-3)
    with pytest.raises(OutOfBranchError):
        symmetric_free_energy_01(-5.0)


def test_semicircle():
    density = gaussian_baseline_density()
    assert density_moment(density, 0) == pytest.approx(1.0, abs=1e-12)
    assert density_moment(density, 2) == pytest.approx(1.0, abs=1e-12)
    assert density_moment(density, 4) == pytest.approx(2.0, abs=1e-12)
    x = np.linspace(-2.5, 2.5, 11)
    assert np.allclose(density(x), semicircle_values(x), atol=1e-14)


def symmetric_m2(g):
    closed, _ = solve_one_cut_01(g) if g >= CRITICAL_01 else solve_two_cut_01(g)
    return closed.m2


def test_m2_slope_is_continuous_across_the_transition():
    h = 1e-4
    above = (symmetric_m2(CRITICAL_01 + 3 * h) - symmetric_m2(CRITICAL_01 + h)) / (2 * h)
    below = (symmetric_m2(CRITICAL_01 - h) - symmetric_m2(CRITICAL_01 - 3 * h)) / (2 * h)
    assert below == pytest.approx(-0.125, abs=1e-10)
    assert abs(above - below) < 1e-4


def test_m2_curvature_jumps_at_the_transition():
    """m2 = -g/8 is linear below -4 sqrt(2) and curved above it."""
    h = 1e-2

    def curvature(g):
        return (symmetric_m2(g + h) - 2.0 * symmetric_m2(g) + symmetric_m2(g - h)) / h ** 2

    assert abs(curvature(CRITICAL_01 - 2 * h)) < 1e-8
    assert curvature(CRITICAL_01 + 2 * h) > 1e-3
