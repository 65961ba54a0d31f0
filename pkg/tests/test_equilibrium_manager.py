"""
Tests for the equilibrium manager.
"""

import numpy as np
import pytest

from src.enums import Ansatz, GeometryModel, RunStatus, SolveStatus
from src.services.equilibrium import EquilibriumManager, symmetric_free_energy_01
from src.utils import ErrorCode, SelectionError

from conftest import CRITICAL_01


@pytest.fixture
def manager(settings):
    return EquilibriumManager(settings)


def test_applicable_ansatze():
    assert EquilibriumManager.applicable_ansatze(GeometryModel.GAUSSIAN_BASELINE, 0.0) == [Ansatz.SYM1]
    assert EquilibriumManager.applicable_ansatze(GeometryModel.MINUS, -1.0) == [Ansatz.SYM1]
    assert EquilibriumManager.applicable_ansatze(GeometryModel.MINUS, -7.0) == [Ansatz.SYM2]
    assert EquilibriumManager.applicable_ansatze(GeometryModel.MINUS, CRITICAL_01) == [Ansatz.SYM1, Ansatz.SYM2]
    assert EquilibriumManager.applicable_ansatze(GeometryModel.PLUS, -1.0) == [Ansatz.SYM1]
    assert EquilibriumManager.applicable_ansatze(GeometryModel.PLUS, -4.0) == [Ansatz.SYM1, Ansatz.ASYM2]


def test_gaussian_baseline_run(manager):
    result = manager.run_equilibrium(GeometryModel.GAUSSIAN_BASELINE, 0.0)
    assert result["status"] == RunStatus.COMPLETED.value
    report = result["reports"][0]
    assert report.chosen
    assert report.support == pytest.approx([-2.0, 2.0])
    assert report.free_energy == pytest.approx(0.75, abs=1e-8)
    assert report.ell == pytest.approx(1.0, abs=1e-8)
    assert report.m4 == pytest.approx(2.0, abs=1e-10)
    assert "symmetrized_density" not in result


def test_two_cut_run_selects_symmetric_two_cut(manager):
    result = manager.run_equilibrium(GeometryModel.MINUS, -7.0)
    selection = result["selection"]
    assert selection.chosen.ansatz is Ansatz.SYM2
    assert not selection.broken
    assert selection.chosen.free_energy == pytest.approx(symmetric_free_energy_01(-7.0), abs=1e-7)
    assert result["closure_error"] < 1e-8
    assert result["grid"].shape == result["density"].shape
    assert np.all(result["density"] >= 0.0)


def test_restricted_run_reports_failure(manager):
    with pytest.raises(SelectionError) as exc_info:
        manager.run_equilibrium(GeometryModel.MINUS, -1.0, Ansatz.SYM2)
    assert exc_info.value.code is ErrorCode.ALL_BRANCHES_FAILED


def test_minus_scan_crosses_boundary(manager):
    report = manager.scan(GeometryModel.MINUS, -5.0, -6.5, -0.5)
    assert report.grid == pytest.approx([-5.0, -5.5, -6.0, -6.5])
    assert report.critical == [CRITICAL_01]
    assert [entry.chosen for entry in report.entries] == [Ansatz.SYM1, Ansatz.SYM1, Ansatz.SYM2, Ansatz.SYM2]

    rows = manager.phase_rows(report)
    assert len(rows) == 4
    assert all(row.status == SolveStatus.CONVERGED.value and row.chosen for row in rows)
    assert rows[0].a1 is None and rows[0].b2 is not None
    assert rows[-1].a1 < rows[-1].b1 < rows[-1].a2 < rows[-1].b2


def test_minus_critical(manager):
    result = manager.critical(GeometryModel.MINUS)
    assert result["critical"] == CRITICAL_01
    assert result["tolerance"] == 0.0


@pytest.mark.slow
def test_plus_weak_coupling_stays_symmetric(manager):
    result = manager.run_equilibrium(GeometryModel.PLUS, -3.0)
    assert result["selection"].chosen.ansatz is Ansatz.SYM1
    assert "symmetrized_density" not in result


@pytest.mark.slow
def test_plus_strong_coupling_breaks_symmetry(manager):
    result = manager.run_equilibrium(GeometryModel.PLUS, -4.0)
    selection = result["selection"]
    assert selection.broken
    assert selection.chosen.ansatz is Ansatz.ASYM2
    assert selection.chosen.moments.m1 > 0.0
    sym = result["symmetrized_density"]
    grid = result["symmetrized_grid"]
    assert sym == pytest.approx(sym[::-1], abs=1e-6)
    assert grid[0] == pytest.approx(-grid[-1])


@pytest.mark.slow
def test_plus_moments_jump_across_the_crossing(manager):
    """The crossing lies in [-3.20, -3.17]; the chosen moments jump there."""
    above = manager.run_equilibrium(GeometryModel.PLUS, -3.15)["selection"].chosen
    below = manager.run_equilibrium(GeometryModel.PLUS, -3.22)["selection"].chosen
    assert above.ansatz is Ansatz.SYM1
    assert below.ansatz is Ansatz.ASYM2
    assert above.moments.m1 == pytest.approx(0.0, abs=1e-12)
    assert abs(below.moments.m1 - above.moments.m1) > 0.1
    assert abs(below.moments.m2 - above.moments.m2) > 1e-3
    assert abs(below.moments.m3 - above.moments.m3) > 1e-3
