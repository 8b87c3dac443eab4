"""
Sequentially truncated HOSVD.

After each factor is computed, the current tensor is contracted with that
factor's transpose, X^(k+1) = X^(k) x_n A^(n)T, and the next mode is
solved on the smaller tensor.
"""

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence

from loguru import logger

from linalg.spectra import gram_left, top_eigenvectors
from linalg.tensor_ops import mode_n_product, unfold
from linalg.tucker import check_orthonormal
from models import DenseTensor, Matrix, MultilinearRank, TuckerDecomposition
from .base import BaseDecomposer, check_mode_order


@dataclass(frozen=True)
class StHosvdStep:
    """One processed mode: its Gram matrix and the factor chosen from it."""
    mode: int
    gram: Matrix
    factor: Matrix
    projected: DenseTensor


def st_hosvd_steps(t: DenseTensor, r: MultilinearRank,
                   order: Optional[Sequence[int]] = None) -> Iterator[StHosvdStep]:
    """Yield every step of ST-HOSVD in processing order."""
    r.check_against(t.shape)
    current = t
    for mode in check_mode_order(order, t.order):
        gram = gram_left(unfold(current, mode))
        factor = top_eigenvectors(gram, r[mode])
        current = mode_n_product(current, factor.T, mode)
        logger.debug("ST-HOSVD mode {}: projected shape {}", mode, current.shape)
        yield StHosvdStep(mode=mode, gram=gram, factor=factor, projected=current)


class StHosvdDecomposer(BaseDecomposer):
    """ST-HOSVD with a configurable mode order."""

    name = "st_hosvd"

    def __init__(self, order: Optional[Sequence[int]] = None):
        self.order = order

    def _decompose(self, t: DenseTensor, r: MultilinearRank) -> TuckerDecomposition:
        order = check_mode_order(self.order, t.order)
        factors: List[Optional[Matrix]] = [None] * t.order
        core = t
        for step in st_hosvd_steps(t, r, order):
            check_orthonormal(step.factor, f"Factor {step.mode + 1}")
            factors[step.mode] = step.factor
            core = step.projected
        return TuckerDecomposition(core=core, factors=tuple(factors))


def st_hosvd(t: DenseTensor, r: MultilinearRank,
             order: Optional[Sequence[int]] = None) -> TuckerDecomposition:
    return StHosvdDecomposer(order=order).decompose(t, r)
