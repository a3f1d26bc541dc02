"""Forward pass, MSE backprop, and He-uniform initialization for the fixed ReLU MLP family."""

from __future__ import annotations

import numpy as np

from lindec.errors import EmptyDataError, ParameterError, ShapeError
from lindec.linalg_v1 import Matrix, Vector
from lindec.mlp_v1.models import Gradients, MlpArchitecture, MlpModel


def _check_inputs(m: MlpModel, x: Matrix) -> None:
    if x.ndim != 2 or x.shape[1] != m.architecture.input_dim:
        raise ShapeError(f"input has shape {x.shape}, model expects (n, {m.architecture.input_dim})")


def _forward_cache(m: MlpModel, x: Matrix) -> tuple[list[Matrix], list[Matrix]]:
    """Return (activations, pre_activations); activations[0] is the input, activations[-1] the (n, 1) output."""
    activations = [x]
    pre_activations = []
    last = m.n_layers - 1
    a = x
    for i, (w, b) in enumerate(zip(m.weights, m.biases, strict=True)):
        z = a @ w + b
        pre_activations.append(z)
        a = np.maximum(z, 0.0) if i < last else z
        activations.append(a)
    return activations, pre_activations


def forward(m: MlpModel, x: Matrix) -> Vector:
    _check_inputs(m, x)
    activations, _ = _forward_cache(m, x)
    return activations[-1][:, 0]


def init_mlp(arch: MlpArchitecture, seed: int) -> MlpModel:
    """Weights ~ U(±sqrt(6 / fan_in)) (variance 2 / fan_in), zero biases."""
    if arch.input_dim < 1 or any(width < 1 for width in arch.hidden_layers):
        raise ParameterError(f"every layer width must be >= 1, got {arch.layer_sizes}")
    rng = np.random.default_rng(seed)
    sizes = arch.layer_sizes
    weights = []
    biases = []
    for fan_in, fan_out in zip(sizes[:-1], sizes[1:], strict=True):
        limit = np.sqrt(6.0 / fan_in)
        weights.append(rng.uniform(-limit, limit, size=(fan_in, fan_out)))
        biases.append(np.zeros(fan_out))
    return MlpModel(architecture=arch, biases=tuple(biases), weights=tuple(weights))


def loss_and_gradients(m: MlpModel, x: Matrix, y: Vector) -> tuple[float, Gradients]:
    """Mean squared error over the batch and its exact gradient. The ReLU derivative at 0 is taken as 0."""
    _check_inputs(m, x)
    if y.ndim != 1 or y.shape[0] != x.shape[0]:
        raise ShapeError(f"target has shape {y.shape}, expected ({x.shape[0]},)")
    n = x.shape[0]
    if n == 0:
        raise EmptyDataError("cannot compute a loss on an empty batch")

    activations, pre_activations = _forward_cache(m, x)
    residual = activations[-1][:, 0] - y
    loss = float(np.mean(residual**2))

    grad_w: list[Matrix] = [np.empty(0)] * m.n_layers
    grad_b: list[Vector] = [np.empty(0)] * m.n_layers
    delta = (2.0 / n) * residual[:, None]
    for i in range(m.n_layers - 1, -1, -1):
        grad_w[i] = activations[i].T @ delta
        grad_b[i] = delta.sum(axis=0)
        if i > 0:
            delta = (delta @ m.weights[i].T) * (pre_activations[i - 1] > 0.0)
    return loss, Gradients(biases=tuple(grad_b), weights=tuple(grad_w))
