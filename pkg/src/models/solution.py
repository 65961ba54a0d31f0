"""
Candidate parameters and solved equilibrium measures.
"""

from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from src.enums import Ansatz, GeometryModel
from src.models.spectral import (
    Moments,
    OneCutSupport,
    QuarticPotential,
    SpectralDensity,
    TwoCutSupport,
)
from src.utils.exceptions import PreconditionError

Support = Union[OneCutSupport, TwoCutSupport]

_SUPPORT_SIZE = {Ansatz.SYM1: 1, Ansatz.SYM2: 2, Ansatz.ASYM1: 2, Ansatz.ASYM2: 4}


@dataclass(frozen=True)
class CandidateParams:
    """
    Unknowns of one ansatz.

    support holds (b,) for SYM1, (a, b) for SYM2 (support -b..-a, a..b;
    a = 0 only where the gap closes), (a, b) for ASYM1 and (a1, b1, a2, b2)
    for ASYM2.
    """

    ansatz: Ansatz
    support: Tuple[float, ...]
    moments: Moments

    def __post_init__(self):
        values = tuple(float(v) for v in self.support)
        object.__setattr__(self, "support", values)
        if len(values) != _SUPPORT_SIZE[self.ansatz]:
            raise PreconditionError(
                f"{self.ansatz.value} expects {_SUPPORT_SIZE[self.ansatz]} support parameters",
                details={"support": list(values)}
            )
        if not self.ordered():
            raise PreconditionError(
                "Support parameters violate the ordering constraint",
                details={"ansatz": self.ansatz.value, "support": list(values)}
            )
        if self.ansatz.symmetric and (self.moments.m1 != 0.0 or self.moments.m3 != 0.0):
            raise PreconditionError(
                "Symmetric ansatz carries m1 = m3 = 0",
                details={"m1": self.moments.m1, "m3": self.moments.m3}
            )

    def ordered(self) -> bool:
        values = np.asarray(self.support)
        if not np.all(np.isfinite(values)):
            return False
        if self.ansatz is Ansatz.SYM1:
            return values[0] > 0
        if self.ansatz is Ansatz.SYM2:
            return 0 <= values[0] < values[1]
        return bool(np.all(np.diff(values) > 0))

    def full_support(self) -> Support:
        s = self.support
        if self.ansatz is Ansatz.SYM1:
            return OneCutSupport(-s[0], s[0])
        if self.ansatz is Ansatz.SYM2:
            if s[0] == 0.0:
                return OneCutSupport(-s[1], s[1])
            return TwoCutSupport.symmetric(s[0], s[1])
        if self.ansatz is Ansatz.ASYM1:
            return OneCutSupport(*s)
        return TwoCutSupport(*s)

    def mirrored(self) -> "CandidateParams":
        if self.ansatz.symmetric:
            return self
        mirrored_support = tuple(-v for v in reversed(self.support))
        return CandidateParams(self.ansatz, mirrored_support, self.moments.mirrored())


@dataclass(frozen=True)
class EffectiveCoefficients:
    """Effective potential together with the moments it was built from."""

    w: QuarticPotential
    source_moments: Moments
    model: GeometryModel
    g: float


@dataclass(frozen=True)
class OneCutSymmetric:
    """Closed-form symmetric 1-cut solution on [-b, b]."""

    b: float
    g: float
    m2: float


@dataclass(frozen=True)
class TwoCutSymmetric:
    """Closed-form symmetric 2-cut solution on [-b, -a] u [a, b]."""

    a: float
    b: float
    g: float
    m2: float


@dataclass(frozen=True)
class EquilibriumSolution:
    """A converged candidate with its density, Lagrange multiplier and free energy."""

    model: GeometryModel
    g: float
    params: CandidateParams
    density: SpectralDensity
    lagrange: float
    free_energy: float
    residual_norm: float = 0.0
    lagrange_spread: float = 0.0

    @property
    def ansatz(self) -> Ansatz:
        return self.params.ansatz

    @property
    def moments(self) -> Moments:
        return self.params.moments

    @property
    def support(self) -> Support:
        return self.params.full_support()

    @property
    def edges(self) -> Tuple[float, ...]:
        return self.density.edges

    def mirrored(self) -> "EquilibriumSolution":
        return replace(self, params=self.params.mirrored(), density=self.density.mirrored())


@dataclass
class PhaseEntry:
    """Candidates found at one coupling and the selected one."""

    g: float
    candidates: Dict[Ansatz, EquilibriumSolution] = field(default_factory=dict)
    failures: Dict[Ansatz, str] = field(default_factory=dict)
    chosen: Optional[Ansatz] = None
    degenerate: bool = False


@dataclass
class PhaseReport:
    """Per-g candidates, selections and critical coupling estimates."""

    model: GeometryModel
    entries: List[PhaseEntry] = field(default_factory=list)
    critical: List[float] = field(default_factory=list)

    @property
    def grid(self) -> List[float]:
        return [entry.g for entry in self.entries]
