from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

import numpy as np
from numpy.typing import ArrayLike, NDArray
from pydantic import BaseModel, field_validator

from lindec.errors import ParameterError, SchemaError, ShapeError
from lindec.linalg_v1 import Matrix, Vector, as_matrix, as_vector

ColumnKind = Literal["numeric", "categorical", "target", "drop"]


class ColumnSpec(BaseModel):
    name: str
    kind: ColumnKind = "numeric"


class ColumnSchema(BaseModel):
    """Per raw CSV column: how `load_csv` treats it. Column order in the schema is the feature order."""

    columns: list[ColumnSpec]

    @field_validator("columns")
    @classmethod
    def _check_columns(cls, value: list[ColumnSpec]) -> list[ColumnSpec]:
        names = [c.name for c in value]
        duplicates = sorted({n for n in names if names.count(n) > 1})
        if duplicates:
            raise ValueError(f"duplicate column names: {duplicates}")
        targets = [c.name for c in value if c.kind == "target"]
        if len(targets) != 1:
            raise ValueError(f"exactly one column must have kind 'target', found {len(targets)}")
        return value

    @property
    def names(self) -> list[str]:
        return [c.name for c in self.columns]

    @property
    def target(self) -> str:
        return next(c.name for c in self.columns if c.kind == "target")


def _frozen(arr: NDArray) -> NDArray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, slots=True)
class Dataset:
    """Feature matrix, target vector and labels. `source_rows` are row positions in the dataset a partition was cut
    from, so disjointness of splits can be checked without comparing float rows."""

    features: Matrix
    target: Vector
    feature_names: tuple[str, ...]
    target_name: str = "y"
    source_rows: NDArray[np.int64] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        features = as_matrix(self.features)
        target = as_vector(self.target)
        if features.shape[0] != target.shape[0]:
            raise ShapeError(f"features have {features.shape[0]} rows but target has {target.shape[0]} entries")
        names = tuple(self.feature_names)
        if len(names) != features.shape[1]:
            raise ShapeError(f"{len(names)} feature names for {features.shape[1]} feature columns")
        rows = np.arange(features.shape[0]) if self.source_rows is None else np.array(self.source_rows)
        if rows.shape != (features.shape[0],):
            raise ShapeError(f"source_rows has shape {rows.shape}, expected ({features.shape[0]},)")
        object.__setattr__(self, "features", _frozen(features))
        object.__setattr__(self, "target", _frozen(target))
        object.__setattr__(self, "feature_names", names)
        object.__setattr__(self, "source_rows", _frozen(rows.astype(np.int64)))

    @property
    def n_features(self) -> int:
        return self.features.shape[1]

    @property
    def n_rows(self) -> int:
        return self.features.shape[0]

    def column(self, name: str) -> Vector:
        try:
            idx = self.feature_names.index(name)
        except ValueError:
            raise SchemaError(f"unknown feature {name!r}; available: {list(self.feature_names)}") from None
        return self.features[:, idx]

    def take(self, indices: ArrayLike) -> Dataset:
        idx = np.asarray(indices, dtype=np.int64)
        return Dataset(
            features=self.features[idx],
            target=self.target[idx],
            feature_names=self.feature_names,
            target_name=self.target_name,
            source_rows=self.source_rows[idx],
        )

    def with_features(self, features: Matrix) -> Dataset:
        return Dataset(
            features=features,
            target=self.target,
            feature_names=self.feature_names,
            target_name=self.target_name,
            source_rows=self.source_rows,
        )


@dataclass(frozen=True, slots=True)
class ShiftSplit:
    train: Dataset
    iid_test: Dataset
    tail_low: Dataset
    tail_high: Dataset
    split_feature: str
    low_q: float
    high_q: float


@dataclass(frozen=True, slots=True)
class Standardizer:
    """Per-feature fit statistics. `stds` are strictly positive: zero-variance columns store 1."""

    means: Vector
    stds: Vector

    def __post_init__(self):
        object.__setattr__(self, "means", _frozen(as_vector(self.means)))
        object.__setattr__(self, "stds", _frozen(as_vector(self.stds)))
        if self.means.shape != self.stds.shape:
            raise ShapeError(f"means {self.means.shape} and stds {self.stds.shape} differ in length")
        if np.any(self.stds <= 0):
            raise ParameterError("standardizer stds must be > 0")
