"""
Status code enums for fuzzy-spectra.
Used for internal state tracking and in written reports.
"""

from enum import Enum


class RunStatus(Enum):
    """Status codes for a command run."""

    COMPLETED = "completed"
    FAILED = "failed"
    PARTIAL = "partial"


class SolveStatus(Enum):
    """Status codes for a single equilibrium solve."""

    CONVERGED = "converged"
    FAILED = "failed"
    BRANCH_END = "branch_end"


class StorageStatus(Enum):
    """Status codes for artifact writes."""

    PENDING = "pending"
    STORED = "stored"
