"""R², RMSE and the linearity score λ(f) = R²(f, g).

All variances are population (1/n) variances, so `r_squared(y, mean(y))` is exactly 0.
"""

from __future__ import annotations

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, computed_field

from lindec.dataset_v1.models import Dataset
from lindec.errors import DegenerateVarianceError, InvariantViolationError, ShapeError
from lindec.linalg_v1 import Vector
from lindec.mlp_v1.models import MlpModel
from lindec.mlp_v1.network import forward
from lindec.surrogate_v1 import LinearModel, predict

__all__ = [
    "METRIC_FIELDS",
    "EvalResult",
    "evaluate_triplet",
    "in_sample_lambda",
    "lambda_score",
    "r_squared",
    "rmse",
]

# Below this the reference vector is treated as constant and R² is undefined.
MIN_VARIANCE = 1e-12
# λ can exceed 1 only through rounding.
LAMBDA_SLACK = 1e-9


class EvalResult(BaseModel):
    """The three-model comparison on one evaluation set. R² values are against the true target; `lambda` compares
    the surrogate to the network. RMSEs are in task units."""

    model_config = ConfigDict(frozen=True, populate_by_name=True, serialize_by_alias=True)

    lambda_f: float = Field(alias="lambda")
    n: int
    r2_baseline: float
    r2_network: float
    r2_surrogate: float
    rmse_baseline: float
    rmse_f: float
    rmse_g: float

    @computed_field
    @property
    def delta_rmse(self) -> float:
        return self.rmse_g - self.rmse_f

    def metric(self, name: str) -> float:
        return self.lambda_f if name == "lambda" else float(getattr(self, name))


# Serialized names of every aggregated metric, in report order.
METRIC_FIELDS: tuple[str, ...] = (
    "lambda",
    "r2_baseline",
    "r2_network",
    "r2_surrogate",
    "rmse_baseline",
    "rmse_f",
    "rmse_g",
    "delta_rmse",
)


def _check_pair(a: Vector, b: Vector, min_len: int, what: str) -> None:
    if a.ndim != 1 or b.ndim != 1 or a.shape != b.shape:
        raise ShapeError(f"{what}: vectors must be 1-D of equal length, got {a.shape} and {b.shape}")
    if a.shape[0] < min_len:
        raise ShapeError(f"{what}: needs at least {min_len} entries, got {a.shape[0]}")


def evaluate_triplet(
    baseline: LinearModel,
    net: MlpModel,
    surrogate: LinearModel,
    eval_set: Dataset,
) -> EvalResult:
    x = eval_set.features
    y = eval_set.target
    baseline_pred = predict(baseline, x)
    network_pred = forward(net, x)
    surrogate_pred = predict(surrogate, x)

    statistic = "r2_baseline"
    try:
        r2_baseline = r_squared(y, baseline_pred)
        statistic = "r2_network"
        r2_network = r_squared(y, network_pred)
        statistic = "r2_surrogate"
        r2_surrogate = r_squared(y, surrogate_pred)
        statistic = "lambda"
        lam = lambda_score(network_pred, surrogate_pred)
    except DegenerateVarianceError as exc:
        raise DegenerateVarianceError(f"{statistic} on {eval_set.n_rows} rows: {exc}", statistic=statistic) from exc

    if lam > 1.0 + LAMBDA_SLACK:
        raise InvariantViolationError(f"lambda={lam!r} exceeds 1")
    return EvalResult(
        lambda_f=lam,
        n=eval_set.n_rows,
        r2_baseline=r2_baseline,
        r2_network=r2_network,
        r2_surrogate=r2_surrogate,
        rmse_baseline=rmse(y, baseline_pred),
        rmse_f=rmse(y, network_pred),
        rmse_g=rmse(y, surrogate_pred),
    )


def in_sample_lambda(net: MlpModel, surrogate: LinearModel, train_set: Dataset) -> float:
    """λ on the rows the surrogate was fit on. Least squares with an intercept cannot do worse than the mean there,
    so anything outside [0, 1] (up to rounding) means the fit or the forward pass is broken."""
    lam = lambda_score(forward(net, train_set.features), predict(surrogate, train_set.features))
    if not -LAMBDA_SLACK <= lam <= 1.0 + LAMBDA_SLACK:
        raise InvariantViolationError(f"in-sample lambda={lam!r} is outside [0, 1]")
    return lam


def lambda_score(f_preds: Vector, g_preds: Vector) -> float:
    """λ(f) = 1 − mean((f − g)²) / Var(f): R² with the network's outputs as the reference."""
    _check_pair(f_preds, g_preds, 2, "lambda_score")
    try:
        return r_squared(f_preds, g_preds)
    except DegenerateVarianceError as exc:
        raise DegenerateVarianceError(
            f"network output variance is below {MIN_VARIANCE:g}; lambda is undefined for a constant network",
            statistic="lambda",
        ) from exc


def r_squared(y_true: Vector, y_pred: Vector) -> float:
    _check_pair(y_true, y_pred, 2, "r_squared")
    variance = float(np.var(y_true))
    if variance < MIN_VARIANCE:
        raise DegenerateVarianceError(f"reference variance {variance:g} is below {MIN_VARIANCE:g}")
    return 1.0 - float(np.mean((y_true - y_pred) ** 2)) / variance


def rmse(y_true: Vector, y_pred: Vector) -> float:
    _check_pair(y_true, y_pred, 1, "rmse")
    return float(np.sqrt(np.mean((y_true - y_pred) ** 2)))
