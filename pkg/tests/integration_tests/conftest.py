"""Root conftest for the integration tier.

These runs train the full-size preset networks, so they take minutes rather than seconds. The Medical Insurance and
California Housing runs need the user-supplied CSV files; point `LINDEC_MEDICAL_CSV` / `LINDEC_CALIFORNIA_CSV` at
them (a `.env` file works too).
"""

import os
from pathlib import Path

import pytest
from dotenv import load_dotenv

load_dotenv()


def _csv_from_env(var: str) -> Path:
    raw = os.getenv(var)
    if not raw:
        pytest.skip(f"{var} not set")
    path = Path(raw).expanduser()
    if not path.is_file():
        pytest.skip(f"{var}={raw} is not a file")
    return path


@pytest.fixture(scope="session")
def california_csv() -> Path:
    return _csv_from_env("LINDEC_CALIFORNIA_CSV")


@pytest.fixture(scope="session")
def medical_csv() -> Path:
    return _csv_from_env("LINDEC_MEDICAL_CSV")
