"""
Distances between a theoretical density and an empirical histogram.
"""

import numpy as np
from scipy.integrate import trapezoid

from src.models import ComparisonMetrics
from src.utils import ValidationError

RESAMPLE_NOTE = "theory density resampled onto the histogram grid by linear interpolation"


def _moments(x: np.ndarray, rho: np.ndarray) -> np.ndarray:
    mass = trapezoid(rho, x)
    return np.array([trapezoid(x ** k * rho, x) / mass for k in (1, 2, 3, 4)])


def compare_densities(theory_x, theory_rho, hist_x, hist_rho) -> ComparisonMetrics:
    """
    L1 and sup-norm distances on the histogram grid, and m1..m4 differences.

    Raises:
        ValidationError: empty, unsorted or mismatched columns
    """
    tx, trho, hx, hrho = (np.asarray(v, dtype=float) for v in (theory_x, theory_rho, hist_x, hist_rho))
    for name, x, rho in (("theory", tx, trho), ("histogram", hx, hrho)):
        if x.size < 2 or x.size != rho.size:
            raise ValidationError(
                f"{name} columns must have equal length of at least 2",
                details={"x": int(x.size), "density": int(rho.size)}
            )
        if np.any(np.diff(x) <= 0):
            raise ValidationError(f"{name} grid must be strictly increasing")

    resampled = not (tx.size == hx.size and np.allclose(tx, hx, rtol=0.0, atol=1e-12))
    theory_on_grid = np.interp(hx, tx, trho, left=0.0, right=0.0) if resampled else trho
    diff = theory_on_grid - hrho
    differences = _moments(tx, trho) - _moments(hx, hrho)
    return ComparisonMetrics(
        l1=float(trapezoid(np.abs(diff), hx)),
        sup_norm=float(np.max(np.abs(diff))),
        moment_differences={f"m{k}": float(d) for k, d in zip((1, 2, 3, 4), differences)},
        resampled=resampled,
        note=RESAMPLE_NOTE if resampled else "",
    )
