"""
Dense tensor algebra.

Unfolding, folding, n-mode products, inner products and symmetry checks.
Mode indices are 0-based in code; column order of an unfolding is
lexicographic over the remaining indices, last index fastest.
"""

from itertools import permutations
from math import prod
from typing import Sequence

import numpy as np

from errors import ConstructionError, DimensionError, ModeError, ShapeError
from models import DenseTensor, Matrix

# Above this order only adjacent transpositions are checked; they generate
# the symmetric group.
FULL_PERMUTATION_LIMIT = 8


def tensor_from_flat(shape: Sequence[int], values: Sequence[float]) -> DenseTensor:
    """Build a tensor from lexicographically ordered values."""
    return DenseTensor.from_flat(shape, values)


def check_mode(order: int, n: int) -> None:
    if not isinstance(n, (int, np.integer)) or not 0 <= n < order:
        raise ModeError(f"Mode {n} out of range for an order-{order} tensor")


def unfold(t: DenseTensor, n: int) -> Matrix:
    """
    Mode-n unfolding X_(n).

    Args:
        t: Tensor to unfold
        n: 0-based mode

    Returns:
        I_n x (prod of the other extents) matrix whose columns are the
        mode-n fibers in lexicographic order
    """
    check_mode(t.order, n)
    return Matrix(np.moveaxis(t.array, n, 0).reshape(t.shape[n], -1))


def fold(m: Matrix, n: int, shape: Sequence[int]) -> DenseTensor:
    """Inverse of unfold for the same mode and shape."""
    shape = tuple(int(extent) for extent in shape)
    check_mode(len(shape), n)
    rest = shape[:n] + shape[n + 1:]
    if m.rows != shape[n] or m.cols != prod(rest):
        raise ShapeError(
            f"Matrix {m.rows}x{m.cols} cannot fold to mode {n} of shape {shape}"
        )
    return DenseTensor(np.moveaxis(m.array.reshape((shape[n],) + rest), 0, n))


def mode_n_product(t: DenseTensor, u: Matrix, n: int) -> DenseTensor:
    """Multiply every mode-n fiber of t by u."""
    check_mode(t.order, n)
    if u.cols != t.shape[n]:
        raise DimensionError(
            f"Matrix has {u.cols} columns but mode {n} has extent {t.shape[n]}"
        )
    shape = t.shape[:n] + (u.rows,) + t.shape[n + 1:]
    return fold(u @ unfold(t, n), n, shape)


def multi_mode_product(t: DenseTensor, matrices: Sequence[Matrix], skip: int = -1,
                       transpose: bool = False) -> DenseTensor:
    """Apply one matrix per mode in increasing mode order, optionally skipping a mode."""
    if len(matrices) != t.order:
        raise ShapeError(f"Expected {t.order} matrices, got {len(matrices)}")
    result = t
    for n, u in enumerate(matrices):
        if n == skip:
            continue
        result = mode_n_product(result, u.T if transpose else u, n)
    return result


def inner_product(a: DenseTensor, b: DenseTensor) -> float:
    if a.shape != b.shape:
        raise ShapeError(f"Cannot take inner product of shapes {a.shape} and {b.shape}")
    return float(np.dot(a.data, b.data))


def frobenius_norm_sq(t: DenseTensor) -> float:
    return inner_product(t, t)


def is_symmetric(t: DenseTensor, tol: float = 0.0) -> bool:
    """True iff t is cubical and invariant under every index permutation."""
    if tol < 0:
        raise ConstructionError("Tolerance must be nonnegative")
    if len(set(t.shape)) != 1:
        return False
    order = t.order
    if order <= FULL_PERMUTATION_LIMIT:
        axes_list = permutations(range(order))
    else:
        axes_list = []
        for k in range(order - 1):
            axes = list(range(order))
            axes[k], axes[k + 1] = axes[k + 1], axes[k]
            axes_list.append(tuple(axes))
    for axes in axes_list:
        if np.max(np.abs(t.array - np.transpose(t.array, axes))) > tol:
            return False
    return True
