import os
from pydantic import BaseSettings, Field, ValidationError as PydanticValidationError
from typing import Optional, List
from functools import lru_cache
from dotenv import load_dotenv, find_dotenv
import logging
from src.enums import LogLevel
from src.utils.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

# Load environment variables from .env file
try:
    env_file = find_dotenv(usecwd=True)
    load_dotenv(env_file, override=False)
    if env_file:
        logger.info(f"Loaded environment from {env_file}")
    else:
        logger.debug("No .env file found, using environment variables")
except Exception as e:
    logger.warning(f"Error loading .env file: {str(e)}")


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    # App settings
    APP_NAME: str = Field(default="fuzzy-spectra")
    APP_VERSION: str = Field(default="1.0.0")
    DEBUG: bool = Field(default=False)

    # Logging settings
    LOG_LEVEL: str = Field(default="INFO")
    LOG_FILE: Optional[str] = None

    # Artifacts
    OUTPUT_DIR: str = Field(default="./output")
    DENSITY_SAMPLE_POINTS: int = Field(default=801)

    # Quadrature
    QUADRATURE_NODES: int = Field(default=256)
    GAP_QUADRATURE_NODES: int = Field(default=128)

    # Newton-Raphson and continuation
    NEWTON_TOL: float = Field(default=1e-12)
    NEWTON_MAX_ITER: int = Field(default=100)
    NEWTON_MAX_HALVINGS: int = Field(default=30)
    NEWTON_FD_STEP: float = Field(default=1e-7)
    NEWTON_COND_LIMIT: float = Field(default=1e14)
    CONTINUATION_MIN_STEP: float = Field(default=1e-4)
    CRITICAL_TOL: float = Field(default=1e-4)
    SEED_PARTICLES: int = Field(default=160)

    # Monte-Carlo
    MC_SWEEPS: int = Field(default=100000)
    MC_BURNIN: int = Field(default=10000)
    MC_WIDTH: float = Field(default=0.1)
    MC_SEED: int = Field(default=20240601)
    MC_SAMPLE_INTERVAL: int = Field(default=10)
    MC_RECENTER_INTERVAL: int = Field(default=1000)
    MC_AUDIT_INTERVAL: int = Field(default=1000)

    # Dirac densities
    DIRAC_GRID_POINTS: int = Field(default=4096)

    class Config:
        env_file = ".env"
        case_sensitive = True


@lru_cache()
def get_settings() -> Settings:
    """
    Create a cached instance of the settings.

    Returns:
        Settings instance

    Raises:
        ConfigurationError: If settings cannot be loaded
    """
    try:
        settings = Settings()
        logger.debug("Settings loaded successfully")
        return settings
    except PydanticValidationError as e:
        error_details = {"validation_errors": e.errors()}
        logger.error(f"Settings validation error: {error_details}")
        raise ConfigurationError(
            "Failed to load application settings",
            details=error_details,
            original_exception=e
        )
    except Exception as e:
        logger.error(f"Unexpected error loading settings: {str(e)}")
        raise ConfigurationError(
            "Unexpected error loading application settings",
            original_exception=e
        )


def validate_settings() -> List[str]:
    """
    Validate that the numerical settings are usable.

    Returns:
        List of problems found (empty when everything is fine)

    Raises:
        ConfigurationError: If the settings cannot be accessed
    """
    try:
        settings = get_settings()
        problems = []

        for name in (
            "QUADRATURE_NODES",
            "GAP_QUADRATURE_NODES",
            "NEWTON_MAX_ITER",
            "SEED_PARTICLES",
            "MC_SAMPLE_INTERVAL",
            "MC_RECENTER_INTERVAL",
            "MC_AUDIT_INTERVAL",
            "DENSITY_SAMPLE_POINTS",
        ):
            if getattr(settings, name) <= 0:
                problems.append(f"{name} must be positive")

        for name in ("NEWTON_TOL", "NEWTON_FD_STEP", "CRITICAL_TOL"):
            value = getattr(settings, name)
            if not 0.0 < value < 1.0:
                problems.append(f"{name} must lie in (0, 1)")

        if settings.NEWTON_MAX_HALVINGS < 0:
            problems.append("NEWTON_MAX_HALVINGS must be non-negative")

        if settings.MC_WIDTH <= 0:
            problems.append("MC_WIDTH must be positive")

        if settings.MC_BURNIN < 0 or settings.MC_SWEEPS <= settings.MC_BURNIN:
            problems.append("MC_SWEEPS must exceed MC_BURNIN >= 0")

        if settings.DIRAC_GRID_POINTS < 512:
            problems.append("DIRAC_GRID_POINTS must be at least 512")

        if settings.LOG_LEVEL.strip().upper() not in LogLevel.choices():
            problems.append(f"LOG_LEVEL must be one of {', '.join(LogLevel.choices())}")

        if os.path.exists(settings.OUTPUT_DIR) and not os.access(settings.OUTPUT_DIR, os.W_OK):
            problems.append("OUTPUT_DIR is not writable")

        if problems:
            logger.warning(f"Invalid settings: {', '.join(problems)}")
        else:
            logger.debug("All settings are valid")

        return problems

    except ConfigurationError:
        raise
    except Exception as e:
        logger.error(f"Error validating settings: {str(e)}")
        raise ConfigurationError(
            "Failed to validate application settings",
            original_exception=e
        )
