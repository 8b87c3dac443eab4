"""
Higher-order orthogonal iteration.

Alternating updates: in inner step n the tensor is contracted through the
transposes of every other current factor, and factor n becomes the top
R_n left singular vectors of that contraction's mode-n unfolding. A new
factor spanning the same subspace as the current one is discarded, so a
fixed point keeps its factors bit for bit.
"""

from typing import List, Optional, Sequence

import numpy as np
from loguru import logger

from linalg.spectra import gram_left, top_eigenvectors
from linalg.tensor_ops import multi_mode_product, unfold
from linalg.tucker import make_decomposition, projector, reconstruction_error_sq
from models import (
    DenseTensor,
    HooiConfig,
    HooiInit,
    HooiTrace,
    Matrix,
    MultilinearRank,
)
from .base import BaseDecomposer
from .hosvd import HosvdDecomposer
from .st_hosvd import StHosvdDecomposer

# Frobenius distance between projectors below which two factors span the same subspace.
SUBSPACE_TOL = 1e-12


def hooi_inner_gram(t: DenseTensor, factors: Sequence[Matrix], n: int) -> Matrix:
    """Gram matrix of the mode-n unfolding of t contracted on every mode except n."""
    contracted = multi_mode_product(t, factors, skip=n, transpose=True)
    return gram_left(unfold(contracted, n))


def same_subspace(a: Matrix, b: Matrix) -> bool:
    """True when two orthonormal factors have the same column space."""
    if a.array.shape != b.array.shape:
        return False
    distance = np.linalg.norm(projector(a).array - projector(b).array)
    return bool(distance <= SUBSPACE_TOL)


class HooiDecomposer(BaseDecomposer):
    """HOOI initialized by HOSVD or ST-HOSVD."""

    name = "hooi"

    def __init__(self, config: Optional[HooiConfig] = None, max_workers: Optional[int] = None,
                 order: Optional[Sequence[int]] = None):
        self.config = config or HooiConfig()
        self.max_workers = max_workers
        # Mode order of the ST-HOSVD initialization.
        self.order = order

    def _initialize(self, t: DenseTensor, r: MultilinearRank):
        if self.config.init == HooiInit.ST_HOSVD:
            return StHosvdDecomposer(order=self.order).decompose(t, r)
        return HosvdDecomposer(max_workers=self.max_workers).decompose(t, r)

    def _decompose(self, t: DenseTensor, r: MultilinearRank) -> HooiTrace:
        cfg = self.config
        decomposition = self._initialize(t, r)
        factors: List[Matrix] = list(decomposition.factors)
        errors_sq = [reconstruction_error_sq(t, decomposition)]
        history = [tuple(factors)]
        converged = False
        iterations = 0

        while iterations < cfg.max_iterations:
            for n in range(t.order):
                candidate = top_eigenvectors(hooi_inner_gram(t, factors, n), r[n])
                if not same_subspace(candidate, factors[n]):
                    factors[n] = candidate
            decomposition = make_decomposition(t, factors)
            error_sq = reconstruction_error_sq(t, decomposition)
            iterations += 1
            history.append(tuple(factors))
            previous = errors_sq[-1]
            errors_sq.append(error_sq)
            logger.debug("HOOI iteration {}: error_sq={:.17g}", iterations, error_sq)
            if abs(previous - error_sq) <= cfg.tolerance * max(1.0, previous):
                converged = True
                break

        if not converged:
            logger.warning("HOOI stopped at the iteration limit ({})", cfg.max_iterations)
        return HooiTrace(
            decomposition=decomposition,
            errors_sq=errors_sq,
            iterations_run=iterations,
            converged=converged,
            factor_history=history,
        )


def hooi(t: DenseTensor, r: MultilinearRank, cfg: Optional[HooiConfig] = None,
         order: Optional[Sequence[int]] = None) -> HooiTrace:
    return HooiDecomposer(config=cfg, order=order).decompose(t, r)
