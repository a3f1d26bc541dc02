from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from lindec.errors import ParameterError, ShapeError
from lindec.linalg_v1 import Matrix, Vector


class MlpArchitecture(BaseModel):
    """`input_dim → hidden_layers… → 1`, ReLU on every hidden layer, identity on the output. An empty
    `hidden_layers` is a plain affine model."""

    model_config = ConfigDict(frozen=True)

    hidden_layers: tuple[int, ...] = ()
    input_dim: int

    @property
    def layer_sizes(self) -> tuple[int, ...]:
        return (self.input_dim, *self.hidden_layers, 1)


class TrainConfig(BaseModel):
    beta1: float = Field(default=0.9, ge=0.0, lt=1.0)
    beta2: float = Field(default=0.999, ge=0.0, lt=1.0)
    batch_size: int = Field(default=32, ge=1)
    epochs: int = Field(default=200, ge=1, le=10000)
    eps_adam: float = Field(default=1e-8, gt=0.0)
    lr: float = Field(default=1e-3, gt=0.0)
    seed: int = 0
    # Train on a standardized target and fold the scale back into the output layer.
    standardize_target: bool = False


def _check_finite(arrays: tuple[np.ndarray, ...], what: str) -> None:
    for i, arr in enumerate(arrays):
        if not np.all(np.isfinite(arr)):
            raise ParameterError(f"{what}[{i}] contains NaN or Inf")


def _check_layer_shapes(
    arch: MlpArchitecture,
    weights: tuple[np.ndarray, ...],
    biases: tuple[np.ndarray, ...],
    what: str,
) -> None:
    sizes = arch.layer_sizes
    if len(weights) != len(sizes) - 1 or len(biases) != len(sizes) - 1:
        raise ShapeError(f"{what}: expected {len(sizes) - 1} layers, got {len(weights)} weights / {len(biases)} biases")
    for i, (w, b) in enumerate(zip(weights, biases, strict=True)):
        if w.shape != (sizes[i], sizes[i + 1]):
            raise ShapeError(f"{what}: layer {i} weight shape {w.shape}, expected {(sizes[i], sizes[i + 1])}")
        if b.shape != (sizes[i + 1],):
            raise ShapeError(f"{what}: layer {i} bias shape {b.shape}, expected {(sizes[i + 1],)}")


def _readonly(arrays) -> tuple[np.ndarray, ...]:
    out = tuple(np.array(a, dtype=np.float64) for a in arrays)
    for a in out:
        a.setflags(write=False)
    return out


@dataclass(frozen=True, slots=True)
class AdamState:
    m_biases: tuple[Vector, ...]
    m_weights: tuple[Matrix, ...]
    v_biases: tuple[Vector, ...]
    v_weights: tuple[Matrix, ...]
    beta1: float = 0.9
    beta2: float = 0.999
    eps_adam: float = 1e-8
    lr: float = 1e-3
    t: int = 0

    def __post_init__(self):
        if self.t < 0:
            raise ParameterError(f"Adam step counter must be >= 0, got {self.t}")
        for name in ("m_biases", "m_weights", "v_biases", "v_weights"):
            object.__setattr__(self, name, _readonly(getattr(self, name)))


@dataclass(frozen=True, slots=True)
class Gradients:
    biases: tuple[Vector, ...]
    weights: tuple[Matrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "biases", _readonly(self.biases))
        object.__setattr__(self, "weights", _readonly(self.weights))


@dataclass(frozen=True, slots=True)
class MlpModel:
    """Layer `i` maps activations `a` to `a @ weights[i] + biases[i]`; weights are (fan_in, fan_out)."""

    architecture: MlpArchitecture
    biases: tuple[Vector, ...]
    weights: tuple[Matrix, ...]

    def __post_init__(self):
        weights = _readonly(self.weights)
        biases = _readonly(self.biases)
        _check_layer_shapes(self.architecture, weights, biases, "MlpModel")
        _check_finite(weights, "weights")
        _check_finite(biases, "biases")
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "biases", biases)

    @property
    def n_layers(self) -> int:
        return len(self.weights)
