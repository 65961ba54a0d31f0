"""
Tests for the damped Newton solver.
"""

import numpy as np
import pytest

from src.services.equilibrium import newton_solve
from src.utils import NonConvergenceError, PreconditionError, SingularJacobianError


def circle_and_diagonal(x):
    return np.array([x[0] ** 2 + x[1] ** 2 - 4.0, x[0] - x[1]])


def test_scalar_root():
    result = newton_solve(lambda x: np.array([x[0] ** 2 - 2.0]), [1.0])
    assert result.x[0] == pytest.approx(np.sqrt(2.0), abs=1e-12)
    assert result.residual_norm < 1e-12
    assert result.iterations > 0


def test_two_dimensional_system():
    result = newton_solve(circle_and_diagonal, [1.0, 0.5])
    assert result.x == pytest.approx([np.sqrt(2.0), np.sqrt(2.0)], abs=1e-10)


def test_start_at_root_takes_no_iterations():
    result = newton_solve(circle_and_diagonal, [np.sqrt(2.0), np.sqrt(2.0)], tol=1e-10)
    assert result.iterations == 0


def test_inadmissible_start_is_rejected():
    with pytest.raises(PreconditionError):
        newton_solve(lambda x: x ** 2 - 2.0, [-1.0], admissible=lambda x: x[0] > 0)


def test_undefined_residual_at_start_is_rejected():
    with pytest.raises(PreconditionError):
        newton_solve(lambda x: np.array([np.nan]), [1.0])


def test_admissible_set_keeps_iterates_positive():
    """From x=5 the full step lands below zero; damping keeps it admissible."""
    result = newton_solve(
        lambda x: np.array([np.log(x[0])]) if x[0] > 0 else np.array([np.nan]),
        [5.0],
        admissible=lambda x: x[0] > 0,
    )
    assert result.x[0] == pytest.approx(1.0, abs=1e-10)


def test_singular_jacobian():
    with pytest.raises(SingularJacobianError):
        newton_solve(lambda x: np.array([x[0] + x[1], x[0] + x[1] - 1.0]), [0.3, 0.2])


def test_iteration_limit_carries_best_iterate():
    with pytest.raises(NonConvergenceError) as exc_info:
        newton_solve(circle_and_diagonal, [1.0, 0.5], max_iter=1)
    error = exc_info.value
    assert error.best_iterate is not None
    assert error.residual_norm < np.max(np.abs(circle_and_diagonal(np.array([1.0, 0.5]))))
