"""
Empirical densities from pooled eigenvalue samples.
"""

from typing import Optional, Tuple, Union

import numpy as np

from src.models import Histogram
from src.services.montecarlo.config import DEFAULT_BINS
from src.utils import ErrorCode, SamplingError

Bins = Union[str, int, np.ndarray]


def empirical_density(
    samples,
    bins: Bins = DEFAULT_BINS,
    canonical: bool = False,
    value_range: Optional[Tuple[float, float]] = None,
) -> Histogram:
    """
    Normalised histogram of all eigenvalues in `samples`.

    Args:
        samples: Eigenvalues, any shape (snapshots are pooled)
        bins: numpy bin specification; Freedman-Diaconis by default
        canonical: Mirror the pooled samples when their mean is negative
        value_range: Histogram range (defaults to the sample range)

    Raises:
        SamplingError: no finite samples
    """
    pooled = np.asarray(samples, dtype=float).ravel()
    pooled = pooled[np.isfinite(pooled)]
    if pooled.size == 0:
        raise SamplingError(
            "Cannot build a density from an empty sample",
            code=ErrorCode.EMPTY_SAMPLES
        )
    mirrored = bool(canonical and pooled.mean() < 0.0)
    if mirrored:
        pooled = -pooled
    density, edges = np.histogram(pooled, bins=bins, range=value_range, density=True)
    return Histogram(edges=edges, density=density, mirrored=mirrored)
