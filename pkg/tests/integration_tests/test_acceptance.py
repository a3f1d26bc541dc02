"""End-to-end runs of the bundled presets, checked against the published numbers with tolerances."""

from __future__ import annotations

import json

import numpy as np
import pandas as pd
import pytest

from lindec.cli_v1 import EXIT_OK, cmd_run
from lindec.experiment_v1 import PRESETS, ExperimentConfig, load_config, run_experiment

pytestmark = pytest.mark.integration

# Published means the runs must land near.
MEDICAL_R2 = {"r2_network": 0.87, "r2_baseline": 0.78, "r2_surrogate": 0.67}
CALIFORNIA_RMSE = {
    "IID": {"rmse_f": 0.519, "rmse_g": 0.718},
    "Tail-L": {"rmse_f": 0.548, "rmse_g": 0.676},
    "Tail-R": {"rmse_f": 0.927, "rmse_g": 0.841},
}


def _with_csv(name: str, path) -> ExperimentConfig:
    cfg = load_config(PRESETS[name])
    return cfg.model_copy(update={"dataset": cfg.dataset.model_copy(update={"path": path})})


@pytest.mark.asyncio
async def test_synthetic_sanity_check(tmp_path):
    out = tmp_path / "synthetic"
    assert await cmd_run("synthetic", out) == EXIT_OK

    mean = json.loads((out / "report.json").read_text())["domains"][0]["mean"]
    assert mean["r2_network"] >= 0.95
    assert -0.1 <= mean["r2_baseline"] <= 0.05
    assert -0.1 <= mean["r2_surrogate"] <= 0.05
    assert -0.1 <= mean["lambda"] <= 0.1

    mimic = pd.read_csv(out / "plots" / "test_network_vs_surrogate.csv")
    slope = np.polyfit(mimic["network_pred"], mimic["surrogate_pred"], 1)[0]
    assert abs(slope) < 0.1


@pytest.mark.asyncio
async def test_medical_insurance_is_highly_decodable(medical_csv):
    report = await run_experiment(_with_csv("medical_insurance", medical_csv))
    mean = report.domain("Test").mean
    assert mean["lambda"] >= 0.85
    assert mean["r2_network"] > mean["r2_baseline"] > mean["r2_surrogate"]
    for key, published in MEDICAL_R2.items():
        assert abs(mean[key] - published) <= 0.10, key


@pytest.mark.asyncio
async def test_california_housing_under_shift(california_csv):
    report = await run_experiment(_with_csv("california_housing", california_csv))
    means = {label: report.domain(label).mean for label in ("IID", "Tail-L", "Tail-R")}
    iid, low, high = means["IID"], means["Tail-L"], means["Tail-R"]
    assert low["lambda"] < iid["lambda"] - 0.15
    assert abs(iid["lambda"] - high["lambda"]) <= 0.15
    assert iid["delta_rmse"] > 0
    assert high["delta_rmse"] < 0
    for label, published in CALIFORNIA_RMSE.items():
        for key, value in published.items():
            assert abs(means[label][key] - value) <= 0.15, f"{label} {key}"
