"""Dense matrix/vector helpers and the least-squares engine behind every affine fit.

Matrices and vectors are plain `float64` numpy arrays (2-D row-major and 1-D). The constructors here are the only
place that checks rank and finiteness; everything downstream assumes arrays that came through them.
"""

from __future__ import annotations

import logging

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import linalg as sla

from lindec.errors import EmptyDataError, ParameterError, ShapeError

logger = logging.getLogger(__name__)

__all__ = ["Matrix", "Vector", "RIDGE_JITTER", "as_matrix", "as_vector", "matmul", "solve_least_squares"]

Matrix = NDArray[np.float64]
Vector = NDArray[np.float64]

# Scaled by trace(XᵀX)/cols so the jitter tracks the magnitude of the Gram matrix.
RIDGE_JITTER = 1e-8


def _require_finite(arr: NDArray[np.float64], what: str) -> None:
    if not np.all(np.isfinite(arr)):
        raise ParameterError(f"{what} contains NaN or Inf")


def as_matrix(data: ArrayLike) -> Matrix:
    arr = np.array(data, dtype=np.float64)
    if arr.ndim != 2:
        raise ShapeError(f"expected a 2-D matrix, got {arr.ndim}-D array of shape {arr.shape}")
    _require_finite(arr, "matrix")
    return arr


def as_vector(data: ArrayLike) -> Vector:
    arr = np.array(data, dtype=np.float64)
    if arr.ndim != 1:
        raise ShapeError(f"expected a 1-D vector, got {arr.ndim}-D array of shape {arr.shape}")
    _require_finite(arr, "vector")
    return arr


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a.ndim != 2 or b.ndim != 2:
        raise ShapeError(f"matmul needs two matrices, got shapes {a.shape} and {b.shape}")
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"cannot multiply {a.shape[0]}x{a.shape[1]} by {b.shape[0]}x{b.shape[1]}")
    out = a @ b
    _require_finite(out, "matmul result")
    return out


def solve_least_squares(x: Matrix, y: Vector) -> Vector:
    """Return β minimizing ‖Xβ − y‖² via the jittered normal equations.

    Solves (XᵀX + λᵣI)β = Xᵀy with a Cholesky factorization, λᵣ = RIDGE_JITTER · trace(XᵀX) / cols. The jitter makes
    rank-deficient designs (redundant one-hot columns, constant columns) solvable and deterministic. An all-zero
    design has no signal to fit and returns the zero vector.
    """
    if x.ndim != 2 or y.ndim != 1:
        raise ShapeError(f"solve_least_squares needs a matrix and a vector, got {x.shape} and {y.shape}")
    if x.shape[0] == 0 or x.shape[1] == 0:
        raise EmptyDataError(f"cannot solve least squares on an empty {x.shape[0]}x{x.shape[1]} design")
    if x.shape[0] != y.shape[0]:
        raise ShapeError(f"design has {x.shape[0]} rows but target has {y.shape[0]} entries")

    gram = x.T @ x
    trace = float(np.trace(gram))
    cols = x.shape[1]
    if trace == 0.0:
        logger.warning("Design matrix is all zeros; returning the zero solution")
        return np.zeros(cols, dtype=np.float64)

    jitter = RIDGE_JITTER * trace / cols
    factor = sla.cho_factor(gram + jitter * np.eye(cols), lower=True)
    beta = sla.cho_solve(factor, x.T @ y)
    _require_finite(beta, "least-squares solution")
    return beta
