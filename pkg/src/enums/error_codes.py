"""
Error code enums for fuzzy-spectra.
"""

from enum import Enum


class ErrorCode(Enum):
    """Enum of error codes for categorizing exceptions."""

    # General errors (1000-1999)
    UNKNOWN_ERROR = 1000
    CONFIGURATION_ERROR = 1001
    VALIDATION_ERROR = 1002

    # Model domain errors (2000-2999)
    MODEL_DOMAIN_ERROR = 2000
    OUT_OF_BRANCH = 2001
    DEGENERATE_CONFIGURATION = 2002
    TRACE_CONSTRAINT_VIOLATION = 2003
    PRECONDITION_VIOLATION = 2004
    UNSUPPORTED_MODEL = 2005

    # Numerical errors (3000-3999)
    NUMERICAL_ERROR = 3000
    NON_CONVERGENCE = 3001
    SINGULAR_JACOBIAN = 3002
    NON_ADMISSIBLE_DENSITY = 3003
    NEAR_SINGULARITY = 3004
    RESIDUAL_VIOLATION = 3005
    SEED_FAILURE = 3006
    NO_SIGN_CHANGE = 3007
    INSUFFICIENT_RESOLUTION = 3008
    EMPTY_CANDIDATES = 3009
    ALL_BRANCHES_FAILED = 3010

    # Sampling errors (4000-4999)
    SAMPLING_ERROR = 4000
    EMPTY_SAMPLES = 4001
    CHECKPOINT_ERROR = 4002

    # Storage errors (5000-5999)
    STORAGE_ERROR = 5000
    ARTIFACT_WRITE_ERROR = 5001
    ARTIFACT_READ_ERROR = 5002

    # Command line errors (6000-6999)
    COMMAND_ERROR = 6000
    USAGE_ERROR = 6001

    @property
    def family(self) -> int:
        """Thousands bucket of the code, e.g. 3 for numerical errors."""
        return self.value // 1000
