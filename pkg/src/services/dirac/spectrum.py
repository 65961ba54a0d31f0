"""
Spectra of D+ = {H, .} and D- = [H, .] from the spectrum of H.

The eigenvalues of D are s = lambda_m +/- lambda_n, so at large N the
Dirac density is the self-convolution (D+) or self-correlation (D-) of
the eigenvalue density.
"""

import numpy as np
from scipy.integrate import trapezoid
from scipy.signal import fftconvolve

from src.enums import DiracSign
from src.models import DiracDensity, Histogram, SpectralDensity
from src.services.dirac.config import DEFAULT_GRID_POINTS, MAX_SNAPSHOTS, MIN_GRID_POINTS
from src.services.montecarlo import empirical_density
from src.utils import ResolutionError, get_logger

logger = get_logger(__name__)


def dirac_density(
    rho: SpectralDensity,
    sign: DiracSign,
    points: int = DEFAULT_GRID_POINTS,
) -> DiracDensity:
    """
    rho_D+(s) = integral rho(s - x) rho(x) dx, rho_D-(s) = integral rho(s + x) rho(x) dx.

    rho is sampled on `points` uniform nodes across its support and
    convolved discretely; the result is renormalised to unit mass.

    Raises:
        ResolutionError: fewer than 512 grid points
    """
    if points < MIN_GRID_POINTS:
        raise ResolutionError(
            f"Dirac density needs at least {MIN_GRID_POINTS} grid points",
            details={"points": points}
        )
    x = np.linspace(rho.lower, rho.upper, points)
    h = x[1] - x[0]
    f = rho(x)

    if sign is DiracSign.PLUS:
        values = fftconvolve(f, f) * h
        start = 2.0 * rho.lower
    else:
        values = fftconvolve(f, f[::-1]) * h
        values = 0.5 * (values + values[::-1])
        start = rho.lower - rho.upper
    grid = start + h * np.arange(values.size)
    values = np.clip(values, 0.0, None)
    values /= trapezoid(values, grid)
    return DiracDensity(sign=sign, grid=grid, values=values)


def dirac_sample(eigenvalues, sign: DiracSign) -> np.ndarray:
    """All N^2 values lambda_m +/- lambda_n."""
    x = np.asarray(eigenvalues, dtype=float).ravel()
    pairs = np.add.outer(x, x) if sign is DiracSign.PLUS else np.subtract.outer(x, x)
    return pairs.ravel()


def dirac_density_from_samples(
    snapshots,
    sign: DiracSign,
    bins="fd",
    max_snapshots: int = MAX_SNAPSHOTS,
) -> Histogram:
    """Histogram of dirac_sample pooled over (at most max_snapshots evenly spaced) snapshots."""
    snapshots = np.atleast_2d(np.asarray(snapshots, dtype=float))
    if snapshots.shape[0] > max_snapshots:
        keep = np.linspace(0, snapshots.shape[0] - 1, max_snapshots).round().astype(int)
        snapshots = snapshots[keep]
    values = np.concatenate([dirac_sample(row, sign) for row in snapshots]) if snapshots.size else []
    return empirical_density(values, bins=bins)
