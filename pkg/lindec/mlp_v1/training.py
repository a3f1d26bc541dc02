from __future__ import annotations

import logging
from collections.abc import Callable

import numpy as np

from lindec.dataset_v1.models import Dataset
from lindec.errors import EmptyDataError, ShapeError
from lindec.mlp_v1.models import MlpArchitecture, MlpModel, TrainConfig
from lindec.mlp_v1.network import init_mlp, loss_and_gradients
from lindec.mlp_v1.optim import adam_step, init_adam

logger = logging.getLogger(__name__)

# Spawn key for the mini-batch shuffling stream; initialization uses the bare seed.
_SHUFFLE_STREAM = 1


def _fold_target_scale(m: MlpModel, mean: float, scale: float) -> MlpModel:
    """Rewrite the output layer so the model predicts `scale · f(x) + mean`."""
    weights = list(m.weights)
    biases = list(m.biases)
    weights[-1] = weights[-1] * scale
    biases[-1] = biases[-1] * scale + mean
    return MlpModel(architecture=m.architecture, biases=tuple(biases), weights=tuple(weights))


def train(
    arch: MlpArchitecture,
    train_set: Dataset,
    cfg: TrainConfig,
    on_epoch: Callable[[int, float], None] | None = None,
) -> MlpModel:
    """Mini-batch Adam on MSE for `cfg.epochs` shuffled epochs; returns the final-epoch model.

    `on_epoch(epoch, loss)` receives the 1-based epoch and the mean training MSE over that epoch's batches, in task
    units. Training is fully determined by `cfg.seed`.
    """
    n = train_set.n_rows
    if n == 0:
        raise EmptyDataError("cannot train on an empty dataset")
    if train_set.n_features != arch.input_dim:
        raise ShapeError(f"architecture expects {arch.input_dim} inputs, dataset has {train_set.n_features}")

    batch_size = cfg.batch_size
    if batch_size > n:
        logger.warning("batch_size %d exceeds %d training rows; clamping to %d", batch_size, n, n)
        batch_size = n

    x = np.asarray(train_set.features)
    y = np.asarray(train_set.target)
    target_mean, target_scale = 0.0, 1.0
    if cfg.standardize_target:
        target_mean = float(y.mean())
        target_scale = float(y.std()) or 1.0
        y = (y - target_mean) / target_scale

    model = init_mlp(arch, cfg.seed)
    state = init_adam(model, cfg)
    shuffle_rng = np.random.default_rng(np.random.SeedSequence(cfg.seed, spawn_key=(_SHUFFLE_STREAM,)))

    for epoch in range(1, cfg.epochs + 1):
        perm = shuffle_rng.permutation(n)
        total = 0.0
        for start in range(0, n, batch_size):
            idx = perm[start : start + batch_size]
            loss, grads = loss_and_gradients(model, x[idx], y[idx])
            state, model = adam_step(state, model, grads)
            total += loss * idx.size
        epoch_loss = total / n * target_scale**2
        logger.debug("epoch %d/%d loss=%.6g", epoch, cfg.epochs, epoch_loss)
        if on_epoch is not None:
            on_epoch(epoch, epoch_loss)

    if cfg.standardize_target:
        model = _fold_target_scale(model, target_mean, target_scale)
    return model
