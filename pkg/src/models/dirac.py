"""
Dirac-operator spectral densities.
"""

from dataclasses import dataclass

import numpy as np
from scipy.integrate import trapezoid

from src.enums import DiracSign


@dataclass(frozen=True, eq=False)
class DiracDensity:
    """Density of s = lambda_m +/- lambda_n sampled on a uniform grid."""

    sign: DiracSign
    grid: np.ndarray
    values: np.ndarray

    @property
    def spacing(self) -> float:
        return float(self.grid[1] - self.grid[0])

    def integral(self) -> float:
        return float(trapezoid(self.values, self.grid))

    def mean(self) -> float:
        return float(trapezoid(self.grid * self.values, self.grid))

    def at(self, s):
        return np.interp(s, self.grid, self.values, left=0.0, right=0.0)
