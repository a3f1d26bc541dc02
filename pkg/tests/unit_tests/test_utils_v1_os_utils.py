import os
import platform

import pytest

from lindec.utils_v1.os_utils import get_platform, get_thread_count


@pytest.mark.parametrize(
    "raw, seeds, expected",
    [
        pytest.param("2", 5, 2, id="explicit"),
        pytest.param("8", 3, 3, id="capped-by-seeds"),
        pytest.param("1", 1, 1, id="serial"),
    ],
)
def test_thread_count_from_env(monkeypatch, raw, seeds, expected):
    monkeypatch.setenv("LINDEC_THREADS", raw)
    assert get_thread_count(seeds) == expected


@pytest.mark.parametrize("raw", ["0", "", "many", "-3"])
def test_thread_count_falls_back_to_cpu_count(monkeypatch, raw):
    monkeypatch.setenv("LINDEC_THREADS", raw)
    assert get_thread_count(1000) == min(os.cpu_count() or 1, 1000)


def test_thread_count_unset(monkeypatch):
    monkeypatch.delenv("LINDEC_THREADS", raising=False)
    assert 1 <= get_thread_count(4) <= 4


def test_platform_is_terse_platform_string():
    assert get_platform() == platform.platform(terse=True)
