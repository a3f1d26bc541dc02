import pytest
from pydantic import ValidationError

from lindec.experiment_v1 import PRESETS, CsvDatasetConfig, ShiftSplitConfig, load_config, resolve_config_path
from lindec.experiment_v1.presets import CONFIGS_ROOT


def test_bundled_presets():
    assert {"synthetic", "medical_insurance", "california_housing"} <= set(PRESETS)


@pytest.mark.parametrize(
    "name, hidden_layers, epochs",
    [
        pytest.param("synthetic", [64, 64], 200, id="synthetic"),
        pytest.param("medical_insurance", [32, 16], 200, id="medical"),
        pytest.param("california_housing", [128], 50, id="california"),
    ],
)
def test_presets_follow_the_published_architectures(name, hidden_layers, epochs):
    cfg = load_config(PRESETS[name])
    assert cfg.architecture.hidden_layers == hidden_layers
    assert cfg.training.epochs == epochs
    assert cfg.seeds == [0, 1, 2, 3, 4]


def test_california_preset_is_a_shift_split_on_income():
    cfg = load_config(PRESETS["california_housing"])
    assert isinstance(cfg.split, ShiftSplitConfig)
    assert (cfg.split.feature, cfg.split.low_q, cfg.split.high_q) == ("MedInc", 0.1, 0.9)


def test_csv_paths_resolve_against_the_config_directory():
    cfg = load_config(PRESETS["medical_insurance"])
    assert isinstance(cfg.dataset, CsvDatasetConfig)
    assert cfg.dataset.path == (CONFIGS_ROOT.parent / "data" / "medical_insurance.csv").resolve()
    assert cfg.training.standardize_target is True


def test_absolute_csv_path_is_kept(tmp_path):
    data = tmp_path / "elsewhere.csv"
    config = tmp_path / "configs" / "exp.json"
    config.parent.mkdir()
    config.write_text(
        '{"architecture": {"hidden_layers": [2]}, "dataset": {"kind": "csv", "path": "%s", '
        '"columns": [{"name": "x"}, {"name": "y", "kind": "target"}]}}' % data.as_posix()
    )
    assert load_config(config).dataset.path == data


def test_resolve_config_path():
    assert resolve_config_path("synthetic") == PRESETS["synthetic"]
    assert str(resolve_config_path("some/other.json")) == "some/other.json"


def test_load_config_errors(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_config(tmp_path / "missing.json")
    broken = tmp_path / "broken.json"
    broken.write_text("{\n  \"seeds\": [1,\n")
    with pytest.raises(ValidationError):
        load_config(broken)
