"""
Base decomposer class.

This module provides the abstract base class shared by HOSVD, ST-HOSVD
and HOOI: argument validation lives here, the algorithm in subclasses.
"""

from abc import ABC, abstractmethod
from typing import Optional, Sequence, Tuple

from errors import OrderError, RankError
from models import DenseTensor, MultilinearRank


class BaseDecomposer(ABC):
    """Abstract base class for Tucker decomposition algorithms."""

    name = "base"

    def decompose(self, t: DenseTensor, r: MultilinearRank):
        """
        Validate the target rank and run the algorithm.

        Args:
            t: Tensor to decompose
            r: Target multilinear rank, 1 <= R_n <= I_n

        Returns:
            Algorithm-specific result (a TuckerDecomposition or HooiTrace)
        """
        if t is None:
            raise TypeError("Tensor cannot be None")
        if not isinstance(r, MultilinearRank):
            raise RankError("Rank must be a MultilinearRank")
        r.check_against(t.shape)
        return self._decompose(t, r)

    @abstractmethod
    def _decompose(self, t: DenseTensor, r: MultilinearRank):
        """Run the algorithm on validated inputs."""
        pass


def check_mode_order(order: Optional[Sequence[int]], n_modes: int) -> Tuple[int, ...]:
    """Return a validated 0-based mode permutation; None means (0, ..., N-1)."""
    if order is None:
        return tuple(range(n_modes))
    order = tuple(int(mode) for mode in order)
    if sorted(order) != list(range(n_modes)):
        raise OrderError(f"Mode order {order} is not a permutation of 0..{n_modes - 1}")
    return order
