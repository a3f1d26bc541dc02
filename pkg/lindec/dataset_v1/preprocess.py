"""Feature standardization. Statistics are population (ddof=0) so the fitting set maps to mean 0 and std 1."""

import numpy as np

from lindec.dataset_v1.models import Dataset, Standardizer
from lindec.errors import EmptyDataError, ShapeError

_ZERO_STD = 1e-12


def _check_columns(s: Standardizer, d: Dataset) -> None:
    if s.means.shape[0] != d.n_features:
        raise ShapeError(f"standardizer fitted on {s.means.shape[0]} columns, dataset has {d.n_features}")


def apply_standardizer(s: Standardizer, d: Dataset) -> Dataset:
    _check_columns(s, d)
    return d.with_features((d.features - s.means) / s.stds)


def fit_standardizer(d: Dataset) -> Standardizer:
    if d.n_rows == 0:
        raise EmptyDataError("cannot fit a standardizer on an empty dataset")
    means = d.features.mean(axis=0)
    stds = d.features.std(axis=0)
    # Rounding in the mean leaves ~1e-16 spread on constant columns; treat that as zero variance.
    stds = np.where(stds > _ZERO_STD * (1.0 + np.abs(means)), stds, 1.0)
    return Standardizer(means=means, stds=stds)


def invert_standardizer(s: Standardizer, d: Dataset) -> Dataset:
    _check_columns(s, d)
    return d.with_features(d.features * s.stds + s.means)
