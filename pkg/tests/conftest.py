"""
Shared fixtures for the test suite.
"""

import os

import numpy as np
import pytest

from simulator.network.geometry import fixed_geometry
from simulator.network.pathloss import make_pathloss
from simulator.settings.system_config import CampaignConfig, DeploymentConfig, SystemParams


@pytest.fixture
def params():
    return SystemParams()


@pytest.fixture
def deployment():
    return DeploymentConfig()


@pytest.fixture
def geometry(params, deployment):
    return fixed_geometry(params.pairs, deployment)


@pytest.fixture
def pathloss(geometry, params):
    return make_pathloss(geometry, params)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def small_campaign():
    """A fast campaign over every scheme."""
    return CampaignConfig(trials=40, seed=7)


@pytest.fixture(autouse=True)
def log_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("LOG_DIR", str(tmp_path / "logs"))
    for name in list(os.environ):
        if name.startswith("IRSSIM_"):
            monkeypatch.delenv(name)
