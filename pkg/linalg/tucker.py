"""
Tucker model operations.

Optimal core for orthonormal factors, reconstruction, residual energy,
the Kronecker form of the mode-n unfolding, and projectors.
"""

from functools import reduce
from typing import Sequence

import numpy as np

from errors import FactorError, ShapeError
from models import DenseTensor, Matrix, TuckerDecomposition
from .tensor_ops import check_mode, frobenius_norm_sq, multi_mode_product, unfold

ORTHONORMAL_TOL = 1e-10


def check_orthonormal(a: Matrix, name: str = "factor") -> None:
    """Raise FactorError unless a^T a = I within ORTHONORMAL_TOL."""
    if a.cols > a.rows:
        raise FactorError(f"{name} has more columns ({a.cols}) than rows ({a.rows})")
    deviation = np.max(np.abs(a.array.T @ a.array - np.eye(a.cols)))
    if deviation > ORTHONORMAL_TOL:
        raise FactorError(f"{name} is not columnwise orthonormal (deviation {deviation:.3e})")


def _check_factors(t: DenseTensor, factors: Sequence[Matrix]) -> None:
    if len(factors) != t.order:
        raise ShapeError(f"Tensor has order {t.order} but {len(factors)} factors were given")
    for n, factor in enumerate(factors):
        if factor.rows != t.shape[n]:
            raise ShapeError(
                f"Factor {n + 1} has {factor.rows} rows, tensor extent is {t.shape[n]}"
            )
        check_orthonormal(factor, f"Factor {n + 1}")


def optimal_core(t: DenseTensor, factors: Sequence[Matrix]) -> DenseTensor:
    """Core minimizing the reconstruction error: X x_1 A1^T ... x_N AN^T."""
    _check_factors(t, factors)
    return multi_mode_product(t, factors, transpose=True)


def make_decomposition(t: DenseTensor, factors: Sequence[Matrix]) -> TuckerDecomposition:
    """Pair orthonormal factors with their optimal core for t."""
    return TuckerDecomposition(core=optimal_core(t, factors), factors=tuple(factors))


def _check_compatible(t: DenseTensor, d: TuckerDecomposition) -> None:
    if d.shape != t.shape:
        raise ShapeError(f"Decomposition targets shape {d.shape}, tensor has shape {t.shape}")


def reconstruct(t: DenseTensor, d: TuckerDecomposition) -> DenseTensor:
    """Return G x_1 A1 ... x_N AN."""
    _check_compatible(t, d)
    return multi_mode_product(d.core, d.factors)


def reconstruction_error_sq(t: DenseTensor, d: TuckerDecomposition) -> float:
    """Squared Frobenius norm of the explicit residual."""
    return frobenius_norm_sq(t - reconstruct(t, d))


def tucker_unfolding(d: TuckerDecomposition, n: int) -> Matrix:
    """Mode-n unfolding of the reconstruction, A^(n) G_(n) (kron of the other factors)^T."""
    check_mode(d.order, n)
    others = [d.factors[m].array for m in range(d.order) if m != n]
    kron = reduce(np.kron, others, np.ones((1, 1)))
    return Matrix(d.factors[n].array @ unfold(d.core, n).array @ kron.T)


def projector(a: Matrix) -> Matrix:
    """Orthogonal projector A A^T onto the column space of a."""
    check_orthonormal(a)
    return Matrix(a.array @ a.array.T)


def projected_tensor(t: DenseTensor, factors: Sequence[Matrix]) -> DenseTensor:
    """X x_1 (A1 A1^T) ... x_N (AN AN^T)."""
    _check_factors(t, factors)
    return multi_mode_product(t, [projector(a) for a in factors])


def selection_factor(extent: int, indices: Sequence[int]) -> Matrix:
    """Standard-basis columns e_i for the given 0-based indices."""
    return Matrix(np.eye(extent)[:, list(indices)])


def selection_decomposition(t: DenseTensor, subsets: Sequence[Sequence[int]]) -> TuckerDecomposition:
    """Decomposition whose factor n keeps the standard-basis directions in subsets[n]."""
    if len(subsets) != t.order:
        raise ShapeError(f"Expected {t.order} index subsets, got {len(subsets)}")
    factors = [selection_factor(t.shape[n], subset) for n, subset in enumerate(subsets)]
    return make_decomposition(t, factors)


def full_rank_decomposition(t: DenseTensor) -> TuckerDecomposition:
    """Identity factors with the tensor itself as core."""
    return make_decomposition(t, [Matrix.identity(extent) for extent in t.shape])
