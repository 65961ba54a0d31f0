"""
Tests for settings loading and validation.
"""

import logging

import pytest

from config.config import Settings, get_settings, validate_settings
from src.app import init_app
from src.enums import LogLevel
from src.utils import ConfigurationError


def test_defaults_are_valid():
    """Default settings pass validation."""
    settings = get_settings()
    assert settings.APP_NAME == "fuzzy-spectra"
    assert settings.NEWTON_TOL == 1e-12
    assert settings.NEWTON_MAX_ITER == 100
    assert settings.DIRAC_GRID_POINTS == 4096
    assert validate_settings() == []


def test_environment_overrides(monkeypatch):
    """Environment variables override the defaults."""
    monkeypatch.setenv("MC_SWEEPS", "5000")
    monkeypatch.setenv("QUADRATURE_NODES", "128")
    get_settings.cache_clear()
    settings = get_settings()
    assert settings.MC_SWEEPS == 5000
    assert settings.QUADRATURE_NODES == 128


def test_settings_are_cached():
    assert get_settings() is get_settings()


@pytest.mark.parametrize(
    "name,value,problem",
    [
        ("NEWTON_TOL", "2.0", "NEWTON_TOL must lie in (0, 1)"),
        ("QUADRATURE_NODES", "0", "QUADRATURE_NODES must be positive"),
        ("MC_WIDTH", "-0.1", "MC_WIDTH must be positive"),
        ("MC_BURNIN", "200000", "MC_SWEEPS must exceed MC_BURNIN >= 0"),
        ("DIRAC_GRID_POINTS", "256", "DIRAC_GRID_POINTS must be at least 512"),
        ("LOG_LEVEL", "LOUD", "LOG_LEVEL must be one of DEBUG, INFO, WARNING, ERROR, CRITICAL"),
    ],
)
def test_validation_reports_problems(monkeypatch, name, value, problem):
    """Out-of-range numerical settings are reported."""
    monkeypatch.setenv(name, value)
    get_settings.cache_clear()
    assert problem in validate_settings()


def test_unparsable_value_raises_configuration_error(monkeypatch):
    monkeypatch.setenv("MC_SWEEPS", "many")
    get_settings.cache_clear()
    with pytest.raises(ConfigurationError):
        get_settings()


def test_init_app_rejects_invalid_settings(monkeypatch):
    """init_app refuses to start with invalid settings."""
    monkeypatch.setenv("NEWTON_FD_STEP", "0")
    get_settings.cache_clear()
    with pytest.raises(ConfigurationError) as excinfo:
        init_app("WARNING")
    assert "NEWTON_FD_STEP" in str(excinfo.value)


def test_settings_dict_is_complete():
    """The settings snapshot written to manifests carries every numerical option."""
    snapshot = Settings().dict()
    for key in ("QUADRATURE_NODES", "GAP_QUADRATURE_NODES", "NEWTON_TOL", "MC_SEED", "CRITICAL_TOL"):
        assert key in snapshot


def test_log_level_parsing():
    assert LogLevel.parse(" warning ") is LogLevel.WARNING
    assert LogLevel.DEBUG.numeric == logging.DEBUG
    with pytest.raises(ValueError, match="Invalid log level"):
        LogLevel.parse("loud")
