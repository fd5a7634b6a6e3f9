"""Shared fixtures for the acidfront tests."""

import numpy as np
import pytest

from acidfront import config
from acidfront.models import Grid1D, make_grid


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch, tmp_path):
    """Isolate every test from the environment and the settings singleton."""
    for name in ("OUTPUT_DIR", "CFL_POLICY", "SWEEP_WORKERS", "LOG_LEVEL"):
        monkeypatch.delenv(f"ACIDFRONT_{name}", raising=False)
    monkeypatch.setenv("ACIDFRONT_OUTPUT_DIR", str(tmp_path / "results"))
    monkeypatch.setattr(config, "_settings", None)
    yield
    monkeypatch.setattr(config, "_settings", None)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def unit_grid() -> Grid1D:
    """200 cells on [0, 1]."""
    return make_grid(0.0, 1.0, 0.005)


@pytest.fixture
def coarse_grid() -> Grid1D:
    """50 cells of width 0.05, where dt = 0.001 gives dt/dx^2 = 0.4."""
    return make_grid(0.0, 2.5, 0.05)
