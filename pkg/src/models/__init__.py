from .spectral import (
    Moments,
    PowerSums,
    QuarticPotential,
    OneCutSupport,
    TwoCutSupport,
    DensityCut,
    SpectralDensity,
)
from .solution import (
    CandidateParams,
    EffectiveCoefficients,
    OneCutSymmetric,
    TwoCutSymmetric,
    EquilibriumSolution,
    PhaseEntry,
    PhaseReport,
    Support,
)
from .ensemble import EigenvalueConfig
from .dirac import DiracDensity
from .montecarlo import Histogram, McConfig, McTrace, batch_means_stderr
from .run import ArtifactRecord, RunManifest, SolutionReport, PhaseRow, ComparisonMetrics

__all__ = [
    "Moments",
    "PowerSums",
    "QuarticPotential",
    "OneCutSupport",
    "TwoCutSupport",
    "DensityCut",
    "SpectralDensity",
    "CandidateParams",
    "EffectiveCoefficients",
    "OneCutSymmetric",
    "TwoCutSymmetric",
    "EquilibriumSolution",
    "PhaseEntry",
    "PhaseReport",
    "Support",
    "EigenvalueConfig",
    "DiracDensity",
    "Histogram",
    "McConfig",
    "McTrace",
    "batch_means_stderr",
    "ArtifactRecord",
    "RunManifest",
    "SolutionReport",
    "PhaseRow",
    "ComparisonMetrics",
]
