from __future__ import annotations

import logging
import math

import numpy as np

from lindec.dataset_v1.models import Dataset, ShiftSplit
from lindec.errors import ParameterError

logger = logging.getLogger(__name__)


def _check_fraction(name: str, value: float) -> None:
    if not 0.0 < value < 1.0:
        raise ParameterError(f"{name} must be in (0, 1), got {value}")


def _rank(q: float, n: int) -> int:
    # 0.1 * 30 is 3.0000000000000004 in floating point; ceil must still give 3.
    return math.ceil(q * n - 1e-9)


def quantile_shift_split(
    d: Dataset,
    *,
    feature: str,
    high_q: float,
    iid_test_fraction: float,
    low_q: float,
    seed: int,
) -> ShiftSplit:
    """Cut `d` into a middle band (split into train / IID test) and the two tails of `feature`.

    Rows are ranked by `feature` with a stable sort. Ranks below ceil(low_q·n) form the low tail and ranks at or above
    ceil(high_q·n) form the high tail, except that rows tying with the nearest middle-band value stay in the middle.
    The tails are therefore strictly below / above every middle value, and depend only on the data, never on `seed`.
    """
    _check_fraction("low_q", low_q)
    _check_fraction("high_q", high_q)
    if not low_q < high_q:
        raise ParameterError(f"low_q must be < high_q, got {low_q} >= {high_q}")
    values = d.column(feature)
    n = d.n_rows

    order = np.argsort(values, kind="stable")
    ranked = values[order]
    low_k = min(_rank(low_q, n), n)
    high_k = max(min(_rank(high_q, n), n), low_k)

    low_end = low_k
    if 0 < low_k < n:
        # Boundary duplicates belong to the middle band.
        low_end = int(np.searchsorted(ranked[:low_k], ranked[low_k], side="left"))
    high_start = high_k
    if 0 < high_k < n:
        boundary = ranked[high_k - 1]
        high_start = high_k + int(np.searchsorted(ranked[high_k:], boundary, side="right"))

    tail_low_idx = np.sort(order[:low_end])
    middle_idx = np.sort(order[low_end:high_start])
    tail_high_idx = np.sort(order[high_start:])
    if tail_low_idx.size == 0 or tail_high_idx.size == 0:
        raise ParameterError(
            f"quantile band [{low_q}, {high_q}] of {feature!r} leaves an empty tail "
            f"(tail_low={tail_low_idx.size}, tail_high={tail_high_idx.size}); values may be constant"
        )

    train, iid_test = train_test_split(d.take(middle_idx), test_fraction=iid_test_fraction, seed=seed)
    logger.debug(
        "Shift split on %r: tail_low=%d train=%d iid_test=%d tail_high=%d",
        feature,
        tail_low_idx.size,
        train.n_rows,
        iid_test.n_rows,
        tail_high_idx.size,
    )
    return ShiftSplit(
        train=train,
        iid_test=iid_test,
        tail_low=d.take(tail_low_idx),
        tail_high=d.take(tail_high_idx),
        split_feature=feature,
        low_q=low_q,
        high_q=high_q,
    )


def train_test_split(d: Dataset, test_fraction: float, seed: int) -> tuple[Dataset, Dataset]:
    """Seeded uniform shuffle, then the first round(test_fraction·n) shuffled rows become the test part."""
    _check_fraction("test_fraction", test_fraction)
    n = d.n_rows
    n_test = int(math.floor(test_fraction * n + 0.5))
    perm = np.random.default_rng(seed).permutation(n)
    return d.take(perm[n_test:]), d.take(perm[:n_test])
