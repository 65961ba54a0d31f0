"""
Shared fixtures for the fuzzy-spectra tests.
"""

import math

import pytest

from config.config import get_settings
from src.utils import configure_logging

configure_logging(level="WARNING")

CRITICAL_01 = -4.0 * math.sqrt(2.0)


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch, tmp_path):
    """Fresh settings per test with outputs under the test's temporary directory."""
    monkeypatch.setenv("OUTPUT_DIR", str(tmp_path / "output"))
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def settings():
    return get_settings()


@pytest.fixture
def out_dir(tmp_path):
    path = tmp_path / "run"
    path.mkdir()
    return str(path)
