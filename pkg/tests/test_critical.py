"""
Tests for critical coupling location.
"""

import pytest

from src.enums import ErrorCode, GeometryModel
from src.services.equilibrium import locate_critical
from src.services.equilibrium.critical import interpolated_crossing
from src.utils import ModelDomainError, NoSignChangeError

from conftest import CRITICAL_01


def test_minus_model_boundary_is_exact():
    assert locate_critical(GeometryModel.MINUS) == CRITICAL_01
    assert locate_critical(GeometryModel.MINUS, -6.0, -5.0) == CRITICAL_01


def test_minus_model_bracket_without_boundary():
    with pytest.raises(NoSignChangeError):
        locate_critical(GeometryModel.MINUS, -5.0, -4.0)


def test_gaussian_baseline_has_no_transition():
    with pytest.raises(ModelDomainError) as exc_info:
        locate_critical(GeometryModel.GAUSSIAN_BASELINE)
    assert exc_info.value.code is ErrorCode.UNSUPPORTED_MODEL


def test_reversed_bracket_is_rejected():
    with pytest.raises(ModelDomainError) as exc_info:
        locate_critical(GeometryModel.PLUS, -3.0, -3.4)
    assert exc_info.value.code is ErrorCode.PRECONDITION_VIOLATION


def test_interpolated_crossing():
    assert interpolated_crossing({-2.0: -1.0, -1.0: 1.0, 0.0: 2.0}) == pytest.approx([-1.5])
    assert interpolated_crossing({-2.0: 1.0, -1.0: 2.0}) == []


@pytest.mark.slow
def test_plus_model_crossing():
    critical = locate_critical(GeometryModel.PLUS, -3.4, -3.0)
    assert -3.20 <= critical <= -3.17


@pytest.mark.slow
def test_plus_model_bracket_above_transition():
    with pytest.raises(NoSignChangeError):
        locate_critical(GeometryModel.PLUS, -2.0, -1.0)
