"""
Tests for Dirac-operator spectral densities.
"""

import numpy as np
import pytest

from src.enums import DiracSign, GeometryModel
from src.services.dirac import DiracManager
from src.services.dirac.spectrum import dirac_density, dirac_density_from_samples, dirac_sample
from src.services.equilibrium import gaussian_baseline_density, solve_two_cut_01
from src.utils import ResolutionError


def test_semicircle_plus_density_at_origin():
    """rho_D+(0) is the integral of rho^2, 8 / (3 pi^2) for the radius-2 semicircle."""
    density = dirac_density(gaussian_baseline_density(), DiracSign.PLUS)
    assert density.at(0.0) == pytest.approx(8.0 / (3.0 * np.pi ** 2), rel=2e-3)
    assert density.integral() == pytest.approx(1.0)
    assert density.grid[0] == pytest.approx(-4.0)
    assert density.grid[-1] == pytest.approx(4.0)


def test_minus_density_is_even():
    closed, rho = solve_two_cut_01(-7.0)
    density = dirac_density(rho, DiracSign.MINUS, points=1024)
    assert density.values == pytest.approx(density.values[::-1])
    assert density.mean() == pytest.approx(0.0, abs=1e-12)
    assert density.integral() == pytest.approx(1.0)
    assert density.grid[-1] == pytest.approx(2.0 * closed.b)


def test_plus_density_of_two_cut_measure():
    closed, rho = solve_two_cut_01(-7.0)
    density = dirac_density(rho, DiracSign.PLUS, points=2048)
    assert density.at(0.0) > 0.0
    assert density.at(2.0 * closed.b + 0.1) == 0.0


def test_too_few_grid_points():
    with pytest.raises(ResolutionError):
        dirac_density(gaussian_baseline_density(), DiracSign.PLUS, points=256)


def test_sampled_spectrum():
    assert sorted(dirac_sample([1.0, 2.0], DiracSign.PLUS)) == [2.0, 3.0, 3.0, 4.0]
    minus = dirac_sample([1.0, 2.0, 4.0], DiracSign.MINUS)
    assert minus.size == 9
    assert np.count_nonzero(minus == 0.0) == 3
    assert minus.sum() == 0.0


def test_sampled_density_is_normalised():
    snapshots = np.random.default_rng(4).normal(size=(500, 12))
    histogram = dirac_density_from_samples(snapshots, DiracSign.MINUS, max_snapshots=50)
    assert histogram.mass() == pytest.approx(1.0)


def test_manager_uses_selected_equilibrium(settings):
    result = DiracManager(settings).run(GeometryModel.GAUSSIAN_BASELINE, 0.0, DiracSign.MINUS)
    assert result["solution"].model is GeometryModel.GAUSSIAN_BASELINE
    dirac = result["dirac"]
    assert dirac.sign is DiracSign.MINUS
    assert dirac.integral() == pytest.approx(1.0)
    assert dirac.at(0.0) == pytest.approx(8.0 / (3.0 * np.pi ** 2), rel=2e-3)
