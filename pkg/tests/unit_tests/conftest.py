import numpy as np
import pytest


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240601)


@pytest.fixture
def single_thread(monkeypatch):
    monkeypatch.setenv("LINDEC_THREADS", "1")
