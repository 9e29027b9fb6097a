"""Shared fixtures for the ringcode test suite."""

from __future__ import annotations

import pytest

from ringcode.core import RingcodeConfig, build_ring, reset_config, set_config
from ringcode.core.config import ORDER_CAP_ENV

LOCAL_RINGS = ["Z2", "Z3", "Z4", "Z8", "Z9", "GF(4)", "Z2[x]/(x^2)"]
TEST_RINGS = ["Z2", "Z3", "Z4", "Z6", "Z8", "Z9", "GF(4)", "Z2xZ2", "Z2xZ4"]


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Fresh default configuration stored under a temporary directory."""
    monkeypatch.delenv(ORDER_CAP_ENV, raising=False)
    monkeypatch.setenv("XDG_CONFIG_HOME", str(tmp_path / "config"))
    config = RingcodeConfig()
    config.config_file = str(tmp_path / "config" / "ringcode" / "config.toml")
    set_config(config)
    yield config
    reset_config()


@pytest.fixture
def z4():
    return build_ring("Z4")


@pytest.fixture
def z6():
    return build_ring("Z6")


@pytest.fixture
def z8():
    return build_ring("Z8")
