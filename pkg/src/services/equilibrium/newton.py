"""
Damped Newton-Raphson with a forward-difference Jacobian.
"""

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from src.services.equilibrium.config import (
    NEWTON_COND_LIMIT,
    NEWTON_FD_STEP,
    NEWTON_MAX_HALVINGS,
    NEWTON_MAX_ITER,
    NEWTON_TOL,
)
from src.utils import (
    BaseAppException,
    NonConvergenceError,
    PreconditionError,
    SingularJacobianError,
    get_logger,
)

logger = get_logger(__name__)


@dataclass(frozen=True)
class NewtonResult:
    x: np.ndarray
    residual_norm: float
    iterations: int


def _safe_eval(fn: Callable, x: np.ndarray) -> Optional[np.ndarray]:
    """Residuals at x, or None when they are not finite or cannot be evaluated."""
    try:
        value = np.asarray(fn(x), dtype=float)
    except (ArithmeticError, ValueError):
        return None
    except BaseAppException as e:
        logger.debug(f"Residual evaluation rejected trial point: {e}")
        return None
    if not np.all(np.isfinite(value)):
        return None
    return value


def forward_jacobian(fn: Callable, x: np.ndarray, f0: np.ndarray, step: float = NEWTON_FD_STEP) -> np.ndarray:
    """Forward differences with step h_i = step * max(1, |x_i|)."""
    jac = np.empty((f0.size, x.size))
    for i in range(x.size):
        h = step * max(1.0, abs(x[i]))
        shifted = x.copy()
        shifted[i] += h
        fi = _safe_eval(fn, shifted)
        if fi is None:
            shifted[i] = x[i] - h
            fi = _safe_eval(fn, shifted)
            if fi is None:
                raise SingularJacobianError(
                    "Residuals undefined next to the iterate",
                    details={"component": i, "x": x.tolist()}
                )
            jac[:, i] = (f0 - fi) / h
        else:
            jac[:, i] = (fi - f0) / h
    return jac


def newton_solve(
    fn: Callable[[np.ndarray], np.ndarray],
    x0,
    admissible: Optional[Callable[[np.ndarray], bool]] = None,
    tol: float = NEWTON_TOL,
    max_iter: int = NEWTON_MAX_ITER,
    max_halvings: int = NEWTON_MAX_HALVINGS,
    fd_step: float = NEWTON_FD_STEP,
    cond_limit: float = NEWTON_COND_LIMIT,
) -> NewtonResult:
    """
    Solve fn(x) = 0.

    A trial step is halved while it leaves the admissible set, produces
    non-finite residuals or fails to lower the infinity norm.

    Raises:
        PreconditionError: x0 is not admissible
        SingularJacobianError: condition estimate above cond_limit
        NonConvergenceError: no convergence; carries the best iterate and norm
    """
    x = np.array(x0, dtype=float)
    if admissible is not None and not admissible(x):
        raise PreconditionError(
            "Newton start violates the ordering constraints",
            details={"x0": x.tolist()}
        )
    f = _safe_eval(fn, x)
    if f is None:
        raise PreconditionError(
            "Residuals are undefined at the Newton start", details={"x0": x.tolist()}
        )
    norm = float(np.max(np.abs(f)))

    for iteration in range(max_iter + 1):
        if norm < tol:
            logger.debug(f"Newton converged in {iteration} iterations, norm={norm:.3e}")
            return NewtonResult(x=x, residual_norm=norm, iterations=iteration)
        if iteration == max_iter:
            break

        jac = forward_jacobian(fn, x, f, fd_step)
        cond = np.linalg.cond(jac)
        if not np.isfinite(cond) or cond > cond_limit:
            raise SingularJacobianError(
                "Newton Jacobian is numerically singular",
                details={"condition": float(cond), "x": x.tolist(), "residual_norm": norm}
            )
        step = np.linalg.solve(jac, -f)

        scale = 1.0
        for _ in range(max_halvings + 1):
            trial = x + scale * step
            if admissible is None or admissible(trial):
                f_trial = _safe_eval(fn, trial)
                if f_trial is not None:
                    trial_norm = float(np.max(np.abs(f_trial)))
                    if trial_norm < norm:
                        break
            scale *= 0.5
        else:
            raise NonConvergenceError(
                "Newton line search could not reduce the residual",
                best_iterate=x,
                residual_norm=norm,
                details={"iteration": iteration}
            )

        x, f, norm = trial, f_trial, trial_norm
        logger.debug(f"Newton iteration {iteration + 1}: norm={norm:.3e}, damping={scale:g}")

    raise NonConvergenceError(
        "Newton iteration limit reached",
        best_iterate=x,
        residual_norm=norm,
        details={"max_iter": max_iter}
    )
