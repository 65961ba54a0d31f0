"""
Monte-Carlo run configuration and traces.
"""

from dataclasses import dataclass
from typing import Any, List, Optional

import numpy as np
from pydantic import BaseModel, Field, root_validator, validator

from src.enums import GeometryModel, InitMode
from src.models.spectral import SpectralDensity


class McConfig(BaseModel):
    """Configuration of one Metropolis chain."""

    model: GeometryModel = Field(..., description="Ensemble to sample")
    g: float = Field(0.0, description="Coupling constant (ignored for the Gaussian baseline)")
    n: int = Field(..., ge=2, description="Matrix size N")
    sweeps: int = Field(..., gt=0, description="Total sweeps including burn-in")
    burnin: int = Field(0, ge=0, description="Burn-in sweeps with width adaptation")
    width: float = Field(0.1, gt=0, description="Initial Gaussian proposal width")
    seed: int = Field(0, ge=0, lt=2 ** 64, description="64-bit RNG seed")
    init: InitMode = Field(InitMode.EVEN, description="Initial configuration")
    init_density: Optional[Any] = Field(
        None, description="Density whose quantiles seed the chain (from-theory)"
    )
    init_values: Optional[List[float]] = Field(
        None, description="Explicit initial eigenvalues"
    )
    positive_trace: bool = Field(
        False, description="Restrict (1,0) sampling to tr H >= 0"
    )
    sample_interval: int = Field(10, gt=0, description="Sweeps between stored snapshots")
    recenter_interval: int = Field(1000, gt=0, description="Sweeps between (0,1) trace re-centering")
    audit_interval: int = Field(1000, gt=0, description="Sweeps between from-scratch energy audits")

    class Config:
        arbitrary_types_allowed = True
        schema_extra = {
            "example": {
                "model": "10",
                "g": -4.0,
                "n": 128,
                "sweeps": 100000,
                "burnin": 10000,
                "width": 0.1,
                "seed": 20240601,
                "init": "from-theory",
                "positive_trace": False,
                "sample_interval": 10
            }
        }

    @root_validator(skip_on_failure=True)
    def check_consistency(cls, values):
        if values["sweeps"] <= values["burnin"]:
            raise ValueError("sweeps must exceed burnin")
        init = values["init"]
        if init is InitMode.FROM_THEORY and values.get("init_density") is None:
            raise ValueError("from-theory initialisation needs init_density")
        if init is InitMode.EXPLICIT:
            explicit = values.get("init_values")
            if explicit is None or len(explicit) != values["n"]:
                raise ValueError("explicit initialisation needs exactly n values")
        if values["positive_trace"] and values["model"] is not GeometryModel.PLUS:
            raise ValueError("positive_trace applies to the (1,0) model only")
        return values

    @validator("init_density")
    def density_type(cls, value):
        if value is not None and not isinstance(value, SpectralDensity):
            raise ValueError("init_density must be a SpectralDensity")
        return value

    @validator("init_values")
    def finite_values(cls, value):
        if value is not None and not np.all(np.isfinite(value)):
            raise ValueError("initial eigenvalues must be finite")
        return value


@dataclass(frozen=True, eq=False)
class McTrace:
    """Per-sample observables of a chain plus its final state."""

    sweeps: np.ndarray
    order_parameter: np.ndarray
    m2: np.ndarray
    energy: np.ndarray
    acceptance: np.ndarray
    acceptance_rate: float
    final_values: np.ndarray
    final_width: float
    snapshots: np.ndarray
    max_audit_drift: float = 0.0

    @property
    def mean_energy(self) -> float:
        return float(np.mean(self.energy)) if self.energy.size else float("nan")

    @property
    def energy_stderr(self) -> float:
        return batch_means_stderr(self.energy)

    @property
    def m2_stderr(self) -> float:
        return batch_means_stderr(self.m2)


def batch_means_stderr(series: np.ndarray, batches: int = 20) -> float:
    """Standard error of the mean from non-overlapping batch means."""
    series = np.asarray(series, dtype=float)
    if series.size < 2 * batches:
        if series.size < 2:
            return float("nan")
        return float(np.std(series, ddof=1) / np.sqrt(series.size))
    usable = series[: (series.size // batches) * batches]
    means = usable.reshape(batches, -1).mean(axis=1)
    return float(np.std(means, ddof=1) / np.sqrt(batches))


@dataclass(frozen=True, eq=False)
class Histogram:
    """Normalised histogram: bin edges and density per bin."""

    edges: np.ndarray
    density: np.ndarray
    mirrored: bool = False

    @property
    def centers(self) -> np.ndarray:
        return 0.5 * (self.edges[:-1] + self.edges[1:])

    @property
    def widths(self) -> np.ndarray:
        return np.diff(self.edges)

    def mass(self) -> float:
        return float(np.sum(self.density * self.widths))
