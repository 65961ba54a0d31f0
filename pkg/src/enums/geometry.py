"""
Ensemble and solution labels.
"""

from enum import Enum


class GeometryModel(Enum):
    """Which random-matrix ensemble is sampled or solved."""

    PLUS = "10"
    MINUS = "01"
    GAUSSIAN_BASELINE = "gue"

    @classmethod
    def from_string(cls, value: str) -> "GeometryModel":
        """Parse a CLI spelling: 10, 01, gue (also plus/minus)."""
        aliases = {"plus": cls.PLUS, "minus": cls.MINUS, "(1,0)": cls.PLUS, "(0,1)": cls.MINUS}
        key = value.strip().lower()
        if key in aliases:
            return aliases[key]
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"Unknown geometry model: {value}")

    @property
    def sign(self) -> int:
        """+1 for (1,0), -1 for (0,1), 0 for the Gaussian baseline."""
        return {GeometryModel.PLUS: 1, GeometryModel.MINUS: -1}.get(self, 0)


class Ansatz(Enum):
    """Support topology and symmetry assumed for an equilibrium candidate."""

    SYM1 = "sym1"
    SYM2 = "sym2"
    ASYM1 = "asym1"
    ASYM2 = "asym2"

    @property
    def cut_count(self) -> int:
        return 1 if self in (Ansatz.SYM1, Ansatz.ASYM1) else 2

    @property
    def symmetric(self) -> bool:
        return self in (Ansatz.SYM1, Ansatz.SYM2)


class DiracSign(Enum):
    """D+ = {H, .} or D- = [H, .]."""

    PLUS = "+"
    MINUS = "-"

    @classmethod
    def from_string(cls, value: str) -> "DiracSign":
        key = value.strip().lower()
        if key in ("+", "plus", "p"):
            return cls.PLUS
        if key in ("-", "minus", "m"):
            return cls.MINUS
        raise ValueError(f"Unknown Dirac sign: {value}")


class InitMode(Enum):
    """Initial eigenvalue configuration for a Monte-Carlo chain."""

    EVEN = "even"
    FROM_THEORY = "from-theory"
    EXPLICIT = "explicit"
