"""
Records that cross the command-line and file boundary.
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class ArtifactRecord(BaseModel):
    """One file written by a command."""

    path: str = Field(..., description="Path relative to the output directory")
    sha256: str = Field(..., description="SHA-256 digest of the file contents")
    size_bytes: int = Field(..., description="File size in bytes")


class RunManifest(BaseModel):
    """Everything needed to reproduce a command run."""

    run_id: str = Field(..., description="Unique ID of this run")
    command: str = Field(..., description="Subcommand name")
    parameters: Dict[str, Any] = Field(default_factory=dict, description="Full parameter record")
    settings: Dict[str, Any] = Field(default_factory=dict, description="Numerical settings in effect")
    tool_version: str = Field(..., description="Version of fuzzy-spectra")
    seeds: List[int] = Field(default_factory=list, description="RNG seeds used")
    outputs: List[ArtifactRecord] = Field(default_factory=list, description="Files written")
    status: str = Field("completed", description="Run status")
    started_at: str = Field(..., description="UTC start time (ISO 8601)")
    wall_clock_seconds: float = Field(..., description="Elapsed wall-clock time")

    class Config:
        schema_extra = {
            "example": {
                "run_id": "0f8c1e2a-4d3b-4c6e-9a51-0d2b7f3e9c11",
                "command": "equilibrium",
                "parameters": {"model": "01", "g": -7.0, "ansatz": "auto"},
                "settings": {"QUADRATURE_NODES": 256},
                "tool_version": "1.0.0",
                "seeds": [],
                "outputs": [
                    {"path": "density.csv", "sha256": "9f2c...", "size_bytes": 40210}
                ],
                "status": "completed",
                "started_at": "2025-01-01T12:00:00+00:00",
                "wall_clock_seconds": 0.42
            }
        }


class SolutionReport(BaseModel):
    """Summary of one equilibrium candidate."""

    model: str = Field(..., description="Ensemble label (10, 01, gue)")
    g: float = Field(..., description="Coupling constant")
    ansatz: str = Field(..., description="sym1, sym2, asym1 or asym2")
    support: List[float] = Field(..., description="Edges of the support in ascending order")
    m1: float = Field(..., description="First moment")
    m2: float = Field(..., description="Second moment")
    m3: float = Field(..., description="Third moment")
    m4: Optional[float] = Field(None, description="Fourth moment")
    ell: float = Field(..., description="Lagrange multiplier")
    free_energy: float = Field(..., description="Free energy of the candidate")
    residual_norm: float = Field(..., description="Infinity norm of the defining residuals")
    chosen: bool = Field(False, description="Whether this candidate minimises the free energy")

    class Config:
        schema_extra = {
            "example": {
                "model": "01",
                "g": -7.0,
                "ansatz": "sym2",
                "support": [-1.2578182, -0.4097478, 0.4097478, 1.2578182],
                "m1": 0.0,
                "m2": 0.875,
                "m3": 0.0,
                "m4": 0.828125,
                "ell": -9.32,
                "free_energy": -5.2301396,
                "residual_norm": 0.0,
                "chosen": True
            }
        }


class PhaseRow(BaseModel):
    """One row of a coupling scan."""

    g: float
    ansatz: str
    status: str
    a1: Optional[float] = None
    b1: Optional[float] = None
    a2: Optional[float] = None
    b2: Optional[float] = None
    m1: Optional[float] = None
    m2: Optional[float] = None
    m3: Optional[float] = None
    ell: Optional[float] = None
    free_energy: Optional[float] = None
    chosen: bool = False


class ComparisonMetrics(BaseModel):
    """Distances between a theory density and an empirical histogram."""

    l1: float = Field(..., description="L1 distance on the common grid")
    sup_norm: float = Field(..., description="Maximum absolute difference")
    moment_differences: Dict[str, float] = Field(..., description="m1..m4 differences (theory - empirical)")
    resampled: bool = Field(False, description="Whether one input was interpolated onto the other grid")
    note: str = Field("", description="Human-readable remark")

    class Config:
        schema_extra = {
            "example": {
                "l1": 0.021,
                "sup_norm": 0.034,
                "moment_differences": {"m1": 0.001, "m2": -0.002, "m3": 0.0, "m4": 0.003},
                "resampled": True,
                "note": "histogram resampled onto theory grid by linear interpolation"
            }
        }
