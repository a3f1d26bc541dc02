"""Affine models: the data baseline fit on (x, y) and the surrogate g fit on (x, f(x)).

Both go through the same `ols_fit`; they differ only in the targets handed to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Literal

import numpy as np
from pydantic import BaseModel, ValidationError

from lindec.dataset_v1.models import Dataset
from lindec.errors import ArtifactError, EmptyDataError, ParameterError, ShapeError
from lindec.linalg_v1 import Matrix, Vector, as_vector, solve_least_squares
from lindec.mlp_v1.models import MlpModel
from lindec.mlp_v1.network import forward

__all__ = [
    "LinearModel",
    "LinearModelDocument",
    "dump_linear_model",
    "fit_surrogate",
    "load_linear_model",
    "ols_fit",
    "predict",
]


@dataclass(frozen=True, slots=True)
class LinearModel:
    weights: Vector
    intercept: float

    def __post_init__(self):
        weights = as_vector(self.weights)
        weights.setflags(write=False)
        if not np.isfinite(self.intercept):
            raise ParameterError(f"intercept must be finite, got {self.intercept}")
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "intercept", float(self.intercept))

    def coefficients(self, feature_names: tuple[str, ...] | list[str]) -> dict[str, float]:
        if len(feature_names) != self.weights.shape[0]:
            raise ShapeError(f"{len(feature_names)} names for {self.weights.shape[0]} weights")
        return {name: float(w) for name, w in zip(feature_names, self.weights, strict=True)}


class LinearModelDocument(BaseModel):
    format: Literal["lindec.linear"] = "lindec.linear"
    version: Literal[1] = 1
    feature_names: list[str]
    intercept: float
    weights: list[float]


def dump_linear_model(m: LinearModel, feature_names: tuple[str, ...], path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    doc = LinearModelDocument(feature_names=list(feature_names), intercept=m.intercept, weights=m.weights.tolist())
    path.write_text(doc.model_dump_json(indent=2))
    return path


def fit_surrogate(net: MlpModel, train: Dataset) -> LinearModel:
    """The optimal affine surrogate g: OLS on the training inputs with the network's outputs as targets."""
    if train.n_rows == 0:
        raise EmptyDataError("cannot fit a surrogate on an empty training set")
    return ols_fit(train.features, forward(net, train.features))


def load_linear_model(path: str | Path) -> LinearModel:
    path = Path(path)
    if not path.is_file():
        raise ArtifactError(f"linear model dump not found: {path}")
    try:
        doc = LinearModelDocument.model_validate_json(path.read_text())
    except ValidationError as exc:
        raise ArtifactError(f"{path} is not a valid linear model dump: {exc}") from exc
    if len(doc.feature_names) != len(doc.weights):
        raise ArtifactError(f"{path}: {len(doc.feature_names)} feature names for {len(doc.weights)} weights")
    return LinearModel(weights=np.array(doc.weights, dtype=np.float64), intercept=doc.intercept)


def ols_fit(features: Matrix, targets: Vector) -> LinearModel:
    """Least-squares affine fit, minimizing mean((w·x + b − t)²) over the rows.

    Features and targets are centered and the weights solved without a constant column, which has the same minimizer
    as appending a ones column. The intercept comes from the means and is not subject to the solver's ridge jitter:
    refitting to a·t + c gives a·w and a·b + c to rounding.
    """
    if features.ndim != 2 or targets.ndim != 1:
        raise ShapeError(f"ols_fit needs a matrix and a vector, got {features.shape} and {targets.shape}")
    if features.shape[0] == 0:
        raise EmptyDataError("cannot fit a linear model on zero rows")
    if features.shape[0] != targets.shape[0]:
        raise ShapeError(f"{features.shape[0]} feature rows but {targets.shape[0]} targets")

    x_mean = features.mean(axis=0)
    t_mean = float(targets.mean())
    if features.shape[1] == 0:
        return LinearModel(weights=np.zeros(0), intercept=t_mean)
    weights = solve_least_squares(features - x_mean, targets - t_mean)
    return LinearModel(weights=weights, intercept=t_mean - float(x_mean @ weights))


def predict(m: LinearModel, features: Matrix) -> Vector:
    if features.ndim != 2 or features.shape[1] != m.weights.shape[0]:
        raise ShapeError(f"features have shape {features.shape}, model has {m.weights.shape[0]} weights")
    return features @ m.weights + m.intercept
