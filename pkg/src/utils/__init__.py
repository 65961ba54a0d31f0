"""
Utilities for fuzzy-spectra.
"""

from src.utils.logging_utils import (
    configure_logging,
    get_logger,
    generate_run_id,
    log_function_call,
    format_structured_log
)

from src.utils.exceptions import (
    BaseAppException,
    ConfigurationError,
    ValidationError,
    UsageError,
    ModelDomainError,
    OutOfBranchError,
    DegenerateConfigurationError,
    PreconditionError,
    NumericalError,
    NonConvergenceError,
    SingularJacobianError,
    NonAdmissibleDensityError,
    NearSingularityError,
    ResidualViolationError,
    SeedFailureError,
    NoSignChangeError,
    ResolutionError,
    SelectionError,
    SamplingError,
    StorageError,
    exit_code_for
)

from src.enums import (
    ErrorCode,
    LogLevel,
    RunStatus,
    SolveStatus,
    StorageStatus
)

__all__ = [
    # Logging utilities
    "configure_logging",
    "get_logger",
    "generate_run_id",
    "log_function_call",
    "format_structured_log",

    # Exceptions
    "BaseAppException",
    "ConfigurationError",
    "ValidationError",
    "UsageError",
    "ModelDomainError",
    "OutOfBranchError",
    "DegenerateConfigurationError",
    "PreconditionError",
    "NumericalError",
    "NonConvergenceError",
    "SingularJacobianError",
    "NonAdmissibleDensityError",
    "NearSingularityError",
    "ResidualViolationError",
    "SeedFailureError",
    "NoSignChangeError",
    "ResolutionError",
    "SelectionError",
    "SamplingError",
    "StorageError",
    "exit_code_for",

    # Enums
    "ErrorCode",
    "LogLevel",
    "RunStatus",
    "SolveStatus",
    "StorageStatus"
]
