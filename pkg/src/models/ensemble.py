"""
Eigenvalue configurations of the finite-N ensembles.
"""

from dataclasses import dataclass, field

import numpy as np

from src.enums import GeometryModel
from src.utils.exceptions import ModelDomainError, ErrorCode

# (0,1) trace tolerance per eigenvalue
TRACE_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class EigenvalueConfig:
    """Eigenvalues of H together with the ensemble they are drawn from."""

    values: np.ndarray
    model: GeometryModel
    g: float = 0.0
    trace_tolerance: float = field(default=TRACE_TOLERANCE)

    def __post_init__(self):
        values = np.array(self.values, dtype=float).ravel()
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return int(self.values.size)

    def validate(self) -> "EigenvalueConfig":
        """Check finiteness and, for (0,1), the vanishing trace."""
        if self.n < 1:
            raise ModelDomainError("Eigenvalue configuration is empty")
        if not np.all(np.isfinite(self.values)):
            raise ModelDomainError(
                "Eigenvalues must be finite",
                details={"non_finite": int(np.count_nonzero(~np.isfinite(self.values)))}
            )
        if self.model is GeometryModel.MINUS:
            trace = float(self.values.sum())
            if abs(trace) > self.trace_tolerance * self.n:
                raise ModelDomainError(
                    "(0,1) configurations must have vanishing trace",
                    code=ErrorCode.TRACE_CONSTRAINT_VIOLATION,
                    details={"trace": trace, "n": self.n}
                )
        return self
