from __future__ import annotations

import numpy as np

from lindec.errors import ShapeError
from lindec.mlp_v1.models import AdamState, Gradients, MlpModel, TrainConfig


def _check_shapes(reference: tuple[np.ndarray, ...], other: tuple[np.ndarray, ...], what: str) -> None:
    if len(reference) != len(other) or any(r.shape != o.shape for r, o in zip(reference, other, strict=False)):
        raise ShapeError(
            f"{what} shapes {[o.shape for o in other]} do not match parameters {[r.shape for r in reference]}"
        )


def adam_step(state: AdamState, m: MlpModel, grads: Gradients) -> tuple[AdamState, MlpModel]:
    """One bias-corrected Adam update of every parameter; returns the new state and model."""
    _check_shapes(m.weights, grads.weights, "weight gradient")
    _check_shapes(m.biases, grads.biases, "bias gradient")
    _check_shapes(m.weights, state.m_weights, "Adam first moment")
    _check_shapes(m.biases, state.m_biases, "Adam first moment")
    _check_shapes(m.weights, state.v_weights, "Adam second moment")
    _check_shapes(m.biases, state.v_biases, "Adam second moment")

    t = state.t + 1
    b1, b2 = state.beta1, state.beta2
    correction1 = 1.0 - b1**t
    correction2 = 1.0 - b2**t

    def update(params, firsts, seconds, gradients):
        new_params, new_firsts, new_seconds = [], [], []
        for theta, m_prev, v_prev, g in zip(params, firsts, seconds, gradients, strict=True):
            m_next = b1 * m_prev + (1.0 - b1) * g
            v_next = b2 * v_prev + (1.0 - b2) * g * g
            m_hat = m_next / correction1
            v_hat = v_next / correction2
            new_params.append(theta - state.lr * m_hat / (np.sqrt(v_hat) + state.eps_adam))
            new_firsts.append(m_next)
            new_seconds.append(v_next)
        return tuple(new_params), tuple(new_firsts), tuple(new_seconds)

    weights, m_weights, v_weights = update(m.weights, state.m_weights, state.v_weights, grads.weights)
    biases, m_biases, v_biases = update(m.biases, state.m_biases, state.v_biases, grads.biases)
    next_state = AdamState(
        m_biases=m_biases,
        m_weights=m_weights,
        v_biases=v_biases,
        v_weights=v_weights,
        beta1=state.beta1,
        beta2=state.beta2,
        eps_adam=state.eps_adam,
        lr=state.lr,
        t=t,
    )
    return next_state, MlpModel(architecture=m.architecture, biases=biases, weights=weights)


def init_adam(m: MlpModel, cfg: TrainConfig) -> AdamState:
    zeros_w = tuple(np.zeros_like(w) for w in m.weights)
    zeros_b = tuple(np.zeros_like(b) for b in m.biases)
    return AdamState(
        m_biases=zeros_b,
        m_weights=zeros_w,
        v_biases=zeros_b,
        v_weights=zeros_w,
        beta1=cfg.beta1,
        beta2=cfg.beta2,
        eps_adam=cfg.eps_adam,
        lr=cfg.lr,
    )
