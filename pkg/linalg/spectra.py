"""
Deterministic symmetric eigensolver.

Left singular vectors are taken from the eigendecomposition of the Gram
matrix X X^T, computed by cyclic Jacobi rotations in a fixed (p, q) order.
Equal inputs always produce bit-equal outputs: no randomness, no
threaded reductions inside a solve, and a fixed tie-break and sign rule.
"""

from typing import List

import numpy as np
from loguru import logger

from errors import ConvergenceError, InputError, RankError
from models import Matrix, SpectralResult

SYMMETRY_TOL = 1e-12
JACOBI_RTOL = 1e-14
MAX_SWEEPS = 100
TIE_RTOL = 1e-10


def gram_left(m: Matrix) -> Matrix:
    """Return the symmetrized Gram matrix m m^T."""
    s = m.array @ m.array.T
    return Matrix((s + s.T) / 2.0)


def _off_diagonal_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _pivot(v: np.ndarray) -> int:
    # argmax returns the first maximum, i.e. ties go to the smaller index.
    return int(np.argmax(np.abs(v)))


def _jacobi(s: np.ndarray):
    a = s.copy()
    k = a.shape[0]
    v = np.eye(k)
    threshold = JACOBI_RTOL * float(np.linalg.norm(s))
    for sweep in range(MAX_SWEEPS + 1):
        off = _off_diagonal_norm(a)
        if off <= threshold:
            logger.debug("Jacobi converged after {} sweeps (off-diagonal {:.3e})", sweep, off)
            return np.diag(a).copy(), v
        if sweep == MAX_SWEEPS:
            break
        for p in range(k - 1):
            for q in range(p + 1, k):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                sign = 1.0 if theta >= 0 else -1.0
                t = sign / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                sn = t * c
                rotation = np.eye(k)
                rotation[p, p] = c
                rotation[q, q] = c
                rotation[p, q] = sn
                rotation[q, p] = -sn
                a = rotation.T @ a @ rotation
                a[p, q] = 0.0
                a[q, p] = 0.0
                v = v @ rotation
    raise ConvergenceError(f"Jacobi eigensolver did not converge in {MAX_SWEEPS} sweeps")


def _descending_order(values: np.ndarray, vectors: np.ndarray) -> List[int]:
    order = sorted(range(values.size), key=lambda i: (-values[i], _pivot(vectors[:, i])))
    if not order:
        return order
    tol = TIE_RTOL * max(1.0, float(values[order[0]]))
    # Group runs of tied eigenvalues, then order each run by pivot row.
    result: List[int] = []
    run = [order[0]]
    for i in order[1:]:
        if abs(values[run[0]] - values[i]) <= tol:
            run.append(i)
        else:
            result.extend(sorted(run, key=lambda j: _pivot(vectors[:, j])))
            run = [i]
    result.extend(sorted(run, key=lambda j: _pivot(vectors[:, j])))
    return result


def symmetric_eig_desc(s: Matrix) -> SpectralResult:
    """
    Eigendecomposition of a symmetric matrix, eigenvalues nonincreasing.

    Tied eigenvalues are ordered by the row of their eigenvector's
    largest-magnitude entry (smaller row first), and every eigenvector is
    signed so that entry is positive.

    Raises:
        InputError: s is not square or not symmetric
        ConvergenceError: Jacobi did not converge within MAX_SWEEPS sweeps
    """
    a = s.array
    if a.shape[0] != a.shape[1]:
        raise InputError(f"Matrix must be square, got {a.shape}")
    scale = max(1.0, float(np.max(np.abs(a))))
    if np.max(np.abs(a - a.T)) > SYMMETRY_TOL * scale:
        raise InputError("Matrix is not symmetric")

    values, vectors = _jacobi(np.array(a, dtype=np.float64))
    order = _descending_order(values, vectors)
    values = values[order]
    vectors = vectors[:, order]
    for j in range(vectors.shape[1]):
        if vectors[_pivot(vectors[:, j]), j] < 0:
            vectors[:, j] = -vectors[:, j]
    values.setflags(write=False)
    return SpectralResult(values=values, vectors=Matrix(vectors))


def top_left_singular_vectors(m: Matrix, k: int) -> Matrix:
    """First k eigenvectors of gram_left(m) as an m.rows x k matrix."""
    if not 1 <= k <= m.rows:
        raise RankError(f"Requested {k} singular vectors from a matrix with {m.rows} rows")
    return top_eigenvectors(gram_left(m), k)


def singular_values_sq(m: Matrix) -> np.ndarray:
    """Squared singular values of m, nonincreasing, rounding negatives clamped to 0."""
    return np.maximum(symmetric_eig_desc(gram_left(m)).values, 0.0)


def top_eigenvectors(s: Matrix, k: int) -> Matrix:
    """First k eigenvectors of a symmetric matrix under symmetric_eig_desc ordering."""
    if not 1 <= k <= s.rows:
        raise RankError(f"Requested {k} eigenvectors from a {s.rows}x{s.rows} matrix")
    return Matrix(symmetric_eig_desc(s).vectors.array[:, :k])
