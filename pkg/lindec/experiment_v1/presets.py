"""Experiment config loading, plus the bundled presets under `configs/` (one JSON document per experiment)."""

from __future__ import annotations

from pathlib import Path

from lindec.experiment_v1.models import CsvDatasetConfig, ExperimentConfig

CONFIGS_ROOT = Path(__file__).resolve().parents[2] / "configs"


def _load_presets() -> dict[str, Path]:
    if not CONFIGS_ROOT.is_dir():
        return {}
    return {p.stem: p for p in sorted(CONFIGS_ROOT.glob("*.json"))}


def load_config(path: str | Path) -> ExperimentConfig:
    """Parse an experiment document. Relative CSV paths resolve against the document's directory.

    Raises `FileNotFoundError` for a missing file and `pydantic.ValidationError` for malformed JSON or fields.
    """
    path = Path(path)
    cfg = ExperimentConfig.model_validate_json(path.read_text(encoding="utf-8"))
    if isinstance(cfg.dataset, CsvDatasetConfig) and not cfg.dataset.path.is_absolute():
        dataset = cfg.dataset.model_copy(update={"path": (path.parent / cfg.dataset.path).resolve()})
        cfg = cfg.model_copy(update={"dataset": dataset})
    return cfg


def resolve_config_path(name_or_path: str) -> Path:
    """A bundled preset name (e.g. `synthetic`) or a filesystem path."""
    path = Path(name_or_path)
    if not path.exists() and name_or_path in PRESETS:
        return PRESETS[name_or_path]
    return path


PRESETS: dict[str, Path] = _load_presets()
