"""
HOSVD decomposer.

Each factor is computed independently from the unfolding of the original
tensor, so the per-mode solves may run on a thread pool without changing
any output bit.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

from loguru import logger

from linalg.spectra import top_left_singular_vectors
from linalg.tensor_ops import unfold
from linalg.tucker import make_decomposition
from models import DenseTensor, Matrix, MultilinearRank, TuckerDecomposition
from .base import BaseDecomposer


class HosvdDecomposer(BaseDecomposer):
    """Truncated higher-order SVD."""

    name = "hosvd"

    def __init__(self, max_workers: Optional[int] = None):
        self.max_workers = max_workers

    def factors(self, t: DenseTensor, r: MultilinearRank) -> List[Matrix]:
        """Top R_n left singular vectors of every unfolding of t."""
        r.check_against(t.shape)

        def solve(n: int) -> Matrix:
            return top_left_singular_vectors(unfold(t, n), r[n])

        modes = range(t.order)
        if self.max_workers and self.max_workers > 1:
            with ThreadPoolExecutor(max_workers=self.max_workers) as pool:
                return list(pool.map(solve, modes))
        return [solve(n) for n in modes]

    def _decompose(self, t: DenseTensor, r: MultilinearRank) -> TuckerDecomposition:
        factors = self.factors(t, r)
        logger.debug("HOSVD computed {} factors for rank ({})", len(factors), r)
        return make_decomposition(t, factors)


def hosvd(t: DenseTensor, r: MultilinearRank, max_workers: Optional[int] = None) -> TuckerDecomposition:
    return HosvdDecomposer(max_workers=max_workers).decompose(t, r)
