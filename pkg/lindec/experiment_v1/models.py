from __future__ import annotations

from pathlib import Path
from typing import Annotated, Literal

from pydantic import BaseModel, Field, PositiveInt, ValidationError, field_validator, model_validator

from lindec.dataset_v1.models import ColumnSchema, ColumnSpec
from lindec.errors import SchemaError
from lindec.metrics_v1 import EvalResult
from lindec.mlp_v1.models import MlpArchitecture, TrainConfig

DomainLabel = Literal["Test", "IID", "Tail-L", "Tail-R"]

DEFAULT_SEEDS = [0, 1, 2, 3, 4]


class ArchitectureConfig(BaseModel):
    hidden_layers: list[PositiveInt] = Field(min_length=1)
    input_dim: PositiveInt | None = None

    def to_architecture(self, input_dim: int) -> MlpArchitecture:
        """Bind to the preprocessed feature count; a configured `input_dim` must agree with it."""
        if self.input_dim is not None and self.input_dim != input_dim:
            raise SchemaError(f"architecture input_dim={self.input_dim} but the dataset has {input_dim} features")
        return MlpArchitecture(hidden_layers=tuple(self.hidden_layers), input_dim=input_dim)


class CsvDatasetConfig(BaseModel):
    kind: Literal["csv"] = "csv"
    columns: list[ColumnSpec]
    path: Path

    @field_validator("columns")
    @classmethod
    def _check_schema(cls, value: list[ColumnSpec]) -> list[ColumnSpec]:
        try:
            ColumnSchema(columns=value)
        except ValidationError as exc:
            raise ValueError(exc.errors()[0]["msg"].removeprefix("Value error, ")) from None
        return value

    @property
    def column_schema(self) -> ColumnSchema:
        return ColumnSchema(columns=self.columns)


class SyntheticDatasetConfig(BaseModel):
    kind: Literal["synthetic"] = "synthetic"
    n: int = Field(default=2000, ge=1)
    noise_std: float = Field(default=0.2, ge=0.0)
    seed: int = 0
    x_max: float = 4.0
    x_min: float = -4.0

    @model_validator(mode="after")
    def _check_range(self) -> SyntheticDatasetConfig:
        if not self.x_min < self.x_max:
            raise ValueError(f"x_min must be < x_max, got [{self.x_min}, {self.x_max}]")
        return self


DatasetConfig = Annotated[CsvDatasetConfig | SyntheticDatasetConfig, Field(discriminator="kind")]


class PlainSplitConfig(BaseModel):
    kind: Literal["plain"] = "plain"
    test_fraction: float = Field(default=0.2, gt=0.0, lt=1.0)


class ShiftSplitConfig(BaseModel):
    """Tails of `feature` below `low_q` / above `high_q` are held out. The middle band is split into train and IID
    test once, with `seed`, so every pipeline seed sees the same partitions."""

    kind: Literal["shift"] = "shift"
    feature: str
    high_q: float = Field(default=0.9, gt=0.0, lt=1.0)
    iid_test_fraction: float = Field(default=0.2, gt=0.0, lt=1.0)
    low_q: float = Field(default=0.1, gt=0.0, lt=1.0)
    seed: int = 0

    @model_validator(mode="after")
    def _check_band(self) -> ShiftSplitConfig:
        if not self.low_q < self.high_q:
            raise ValueError(f"low_q must be < high_q, got {self.low_q} >= {self.high_q}")
        return self


SplitConfig = Annotated[PlainSplitConfig | ShiftSplitConfig, Field(discriminator="kind")]


class ExperimentConfig(BaseModel):
    architecture: ArchitectureConfig
    dataset: DatasetConfig
    name: str = "experiment"
    seeds: list[int] = Field(default_factory=lambda: list(DEFAULT_SEEDS), min_length=1)
    split: SplitConfig = Field(default_factory=PlainSplitConfig)
    training: TrainConfig = Field(default_factory=TrainConfig)


class DomainResult(BaseModel):
    label: DomainLabel
    mean: dict[str, float]
    per_seed: list[EvalResult]
    seeds: list[int]
    std: dict[str, float]

    @model_validator(mode="after")
    def _check_aggregates(self) -> DomainResult:
        if len(self.per_seed) != len(self.seeds):
            raise ValueError(f"{len(self.per_seed)} per-seed results for {len(self.seeds)} seeds")
        if any(v < 0 for v in self.std.values()):
            raise ValueError("std values must be >= 0")
        return self


class Provenance(BaseModel):
    config_hash: str
    created_at: str
    lindec_version: str
    platform: str
    python_version: str


class SeedSummary(BaseModel):
    """Per-seed training record plus the fitted affine coefficients (feature name → weight)."""

    baseline_coefficients: dict[str, float]
    baseline_intercept: float
    epoch_losses: list[float]
    epochs: int
    final_train_loss: float
    n_train: int
    seed: int
    surrogate_coefficients: dict[str, float]
    surrogate_intercept: float


class ExperimentReport(BaseModel):
    config_echo: ExperimentConfig
    domains: list[DomainResult]
    models: list[SeedSummary]
    provenance: Provenance

    def domain(self, label: DomainLabel) -> DomainResult:
        for d in self.domains:
            if d.label == label:
                return d
        raise KeyError(label)

    def summary(self) -> str:
        """Table-style text: λ and the three R² values for a plain split, λ and the RMSE columns under shift."""
        cfg = self.config_echo
        if cfg.split.kind == "shift":
            columns = [("λ(f)", "lambda"), ("RMSE(f)", "rmse_f"), ("RMSE(g)", "rmse_g"), ("ΔRMSE", "delta_rmse")]
        else:
            columns = [
                ("λ(f)", "lambda"),
                ("Baseline R²", "r2_baseline"),
                ("Network R²", "r2_network"),
                ("Surrogate R²", "r2_surrogate"),
            ]
        lines = [f"Experiment {cfg.name} | {len(cfg.seeds)} seed(s) | config {self.provenance.config_hash[:8]}"]
        lines.append("  " + f"{'Domain':<8}" + "".join(f"{title:>20}" for title, _ in columns))
        for d in self.domains:
            cells = "".join(f"{f'{d.mean[key]:+.3f} ± {d.std[key]:.3f}':>20}" for _, key in columns)
            lines.append(f"  {d.label:<8}{cells}")
        return "\n".join(lines)
