"""
Value types for equilibrium measures: moments, quartic potentials,
supports and piecewise spectral densities.
"""

from dataclasses import dataclass, field
from typing import Optional, Tuple, List

import numpy as np
from numpy.polynomial import polynomial as P

from src.utils.exceptions import ModelDomainError, PreconditionError


@dataclass(frozen=True)
class Moments:
    """First spectral moments of a (candidate) equilibrium measure."""

    m1: float
    m2: float
    m3: float
    m4: Optional[float] = None

    def violations(self, tol: float = 1e-12) -> List[str]:
        """Return the probability-measure constraints this triple breaks."""
        problems = []
        if self.m2 < -tol:
            problems.append("m2 < 0")
        if self.m2 - self.m1 ** 2 < -tol:
            problems.append("m2 < m1^2")
        return problems

    def mirrored(self) -> "Moments":
        return Moments(-self.m1, self.m2, -self.m3, self.m4)

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.m1, self.m2, self.m3)


@dataclass(frozen=True)
class PowerSums:
    """Power sums P_k = sum_i lambda_i^k, k = 1..4."""

    p1: float
    p2: float
    p3: float
    p4: float

    @classmethod
    def from_values(cls, values) -> "PowerSums":
        x = np.asarray(values, dtype=float)
        x2 = x * x
        return cls(float(x.sum()), float(x2.sum()), float((x2 * x).sum()), float((x2 * x2).sum()))

    def violations(self, n: int, tol: float = 1e-9) -> List[str]:
        problems = []
        if self.p2 < -tol:
            problems.append("P2 < 0")
        if self.p4 < -tol:
            problems.append("P4 < 0")
        if self.p2 * n - self.p1 ** 2 < -tol * max(1.0, self.p1 ** 2):
            problems.append("P2*N < P1^2")
        return problems


@dataclass(frozen=True)
class QuarticPotential:
    """W(x) = w1 x + w2 x^2 + w3 x^3 + w4 x^4 (constant term fixed to 0)."""

    w1: float
    w2: float
    w3: float
    w4: float

    def __post_init__(self):
        if not self.w4 > 0:
            raise ModelDomainError(
                "Quartic potential needs a positive leading coefficient",
                details={"w4": self.w4}
            )

    @property
    def coefficients(self) -> np.ndarray:
        return np.array([0.0, self.w1, self.w2, self.w3, self.w4])

    def __call__(self, x):
        return P.polyval(x, self.coefficients)

    def derivative(self, x):
        return P.polyval(x, P.polyder(self.coefficients))


@dataclass(frozen=True)
class OneCutSupport:
    """Support [a, b]."""

    a: float
    b: float

    def __post_init__(self):
        if not (np.isfinite(self.a) and np.isfinite(self.b) and self.a < self.b):
            raise PreconditionError(
                "One-cut support needs finite a < b",
                details={"a": self.a, "b": self.b}
            )

    @property
    def s1(self) -> float:
        return self.a + self.b

    @property
    def s2(self) -> float:
        return self.a * self.b

    @property
    def edges(self) -> Tuple[float, ...]:
        return (self.a, self.b)

    @property
    def cuts(self) -> Tuple[Tuple[float, float], ...]:
        return ((self.a, self.b),)

    def q(self, z):
        return (z - self.a) * (z - self.b)

    def mirrored(self) -> "OneCutSupport":
        return OneCutSupport(-self.b, -self.a)


@dataclass(frozen=True)
class TwoCutSupport:
    """Support [a1, b1] u [a2, b2] with a1 < b1 < a2 < b2."""

    a1: float
    b1: float
    a2: float
    b2: float

    def __post_init__(self):
        values = np.array(self.edges)
        if not np.all(np.isfinite(values)) or not (self.a1 < self.b1 < self.a2 < self.b2):
            raise PreconditionError(
                "Two-cut support needs a1 < b1 < a2 < b2",
                details={"edges": list(self.edges)}
            )

    @property
    def edges(self) -> Tuple[float, ...]:
        return (self.a1, self.b1, self.a2, self.b2)

    @property
    def cuts(self) -> Tuple[Tuple[float, float], ...]:
        return ((self.a1, self.b1), (self.a2, self.b2))

    @property
    def gap(self) -> Tuple[float, float]:
        return (self.b1, self.a2)

    @property
    def s1(self) -> float:
        return self.a1 + self.b1 + self.a2 + self.b2

    @property
    def s2(self) -> float:
        a1, b1, a2, b2 = self.edges
        return a1 * b1 + a2 * b2 + a1 * a2 + b1 * b2 + a1 * b2 + b1 * a2

    @property
    def s3(self) -> float:
        a1, b1, a2, b2 = self.edges
        return a1 * b1 * a2 + a1 * b1 * b2 + a1 * a2 * b2 + b1 * a2 * b2

    @property
    def s4(self) -> float:
        a1, b1, a2, b2 = self.edges
        return a1 * b1 * a2 * b2

    def q(self, z):
        """q(z) = z^4 - s1 z^3 + s2 z^2 - s3 z + s4."""
        return z ** 4 - self.s1 * z ** 3 + self.s2 * z ** 2 - self.s3 * z + self.s4

    def mirrored(self) -> "TwoCutSupport":
        return TwoCutSupport(-self.b2, -self.a2, -self.b1, -self.a1)

    @classmethod
    def symmetric(cls, a: float, b: float) -> "TwoCutSupport":
        return cls(-b, -a, a, b)


@dataclass(frozen=True)
class DensityCut:
    """One interval of the support and its prefactor polynomial (ascending coefficients)."""

    lo: float
    hi: float
    prefactor: Tuple[float, ...]

    def prefactor_at(self, x):
        return P.polyval(x, np.asarray(self.prefactor, dtype=float))

    @property
    def width(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class SpectralDensity:
    """
    Piecewise density rho(x) = prefactor_k(x) * sqrt(|q(x)|) / pi on cut k.

    `edges` are the roots of q in ascending order; cut k spans
    edges[2k], edges[2k+1].
    """

    cuts: Tuple[DensityCut, ...]
    edges: Tuple[float, ...] = field(default=())

    def __post_init__(self):
        if not self.cuts:
            raise PreconditionError("A spectral density needs at least one cut")
        if not self.edges:
            object.__setattr__(
                self, "edges", tuple(e for cut in self.cuts for e in (cut.lo, cut.hi))
            )
        if len(self.edges) != 2 * len(self.cuts):
            raise PreconditionError(
                "Edges must pair up with cuts",
                details={"edges": list(self.edges), "cuts": len(self.cuts)}
            )

    @property
    def lower(self) -> float:
        return self.cuts[0].lo

    @property
    def upper(self) -> float:
        return self.cuts[-1].hi

    def smooth_factor(self, index: int, x):
        """rho(x) / sqrt((hi - x)(x - lo)) on cut `index`; analytic inside the cut."""
        cut = self.cuts[index]
        x = np.asarray(x, dtype=float)
        rest = np.ones_like(x)
        for k, edge in enumerate(self.edges):
            if k // 2 != index:
                rest = rest * np.abs(x - edge)
        return cut.prefactor_at(x) * np.sqrt(rest) / np.pi

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        values = np.zeros_like(x)
        for index, cut in enumerate(self.cuts):
            inside = (x >= cut.lo) & (x <= cut.hi)
            if np.any(inside):
                xi = x[inside]
                edge = np.sqrt(np.clip((cut.hi - xi) * (xi - cut.lo), 0.0, None))
                values[inside] = self.smooth_factor(index, xi) * edge
        return values

    def contains(self, x: float, margin: float = 0.0) -> bool:
        return any(cut.lo + margin < x < cut.hi - margin for cut in self.cuts)

    def distance_to_support(self, z: complex) -> float:
        best = np.inf
        for cut in self.cuts:
            xr = min(max(z.real, cut.lo), cut.hi)
            best = min(best, abs(complex(z) - xr))
        return float(best)

    def mirrored(self) -> "SpectralDensity":
        """Density of -x."""
        cuts = []
        for cut in reversed(self.cuts):
            coeffs = tuple(c * (-1) ** k for k, c in enumerate(cut.prefactor))
            cuts.append(DensityCut(-cut.hi, -cut.lo, coeffs))
        return SpectralDensity(tuple(cuts), tuple(-e for e in reversed(self.edges)))
