"""
Tucker decomposition algorithms.

HOSVD, sequentially truncated HOSVD, and HOOI, all built on the
BaseDecomposer interface.
"""

from typing import Optional, Sequence, Union

from models import Algorithm, HooiConfig, HooiTrace, TuckerDecomposition
from .base import BaseDecomposer
from .hosvd import HosvdDecomposer, hosvd
from .st_hosvd import StHosvdDecomposer, st_hosvd, st_hosvd_steps
from .hooi import HooiDecomposer, hooi, hooi_inner_gram, same_subspace


def create_decomposer(algorithm: Algorithm, hooi_config: Optional[HooiConfig] = None,
                      order: Optional[Sequence[int]] = None,
                      max_workers: Optional[int] = None) -> BaseDecomposer:
    """Create the decomposer for an algorithm."""
    if algorithm == Algorithm.HOSVD:
        return HosvdDecomposer(max_workers=max_workers)
    elif algorithm == Algorithm.ST_HOSVD:
        return StHosvdDecomposer(order=order)
    elif algorithm == Algorithm.HOOI:
        return HooiDecomposer(config=hooi_config, max_workers=max_workers, order=order)
    else:
        raise ValueError(f"Unknown algorithm: {algorithm}")


def decomposition_of(result: Union[TuckerDecomposition, HooiTrace]) -> TuckerDecomposition:
    """Final decomposition of a decomposer result."""
    if isinstance(result, HooiTrace):
        return result.decomposition
    return result


__all__ = [
    'BaseDecomposer',
    'HosvdDecomposer',
    'StHosvdDecomposer',
    'HooiDecomposer',
    'create_decomposer',
    'decomposition_of',
    'hosvd',
    'st_hosvd',
    'st_hosvd_steps',
    'hooi',
    'hooi_inner_gram',
    'same_subspace',
]
