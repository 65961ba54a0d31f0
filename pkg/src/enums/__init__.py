"""
Enums package for fuzzy-spectra.
"""

from src.enums.error_codes import ErrorCode
from src.enums.log_levels import LogLevel
from src.enums.status_codes import RunStatus, SolveStatus, StorageStatus
from src.enums.geometry import GeometryModel, Ansatz, DiracSign, InitMode

__all__ = [
    # Error codes
    "ErrorCode",

    # Log levels
    "LogLevel",

    # Status codes
    "RunStatus",
    "SolveStatus",
    "StorageStatus",

    # Ensemble labels
    "GeometryModel",
    "Ansatz",
    "DiracSign",
    "InitMode",
]
