"""
Quantitative verification.

Tail-energy upper bound, a brute-force axis-aligned oracle for small
instances, and ratio reports comparing an algorithm's error against the
explicit competitor decomposition of an adversarial instance.
"""

from itertools import combinations, product
from math import comb, prod
from typing import NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np
from loguru import logger

from adversarial import competitor_decomposition
from decompose import create_decomposer, decomposition_of
from errors import RankError, ShapeError, SizeError
from linalg.spectra import singular_values_sq
from linalg.tensor_ops import unfold
from linalg.tucker import reconstruction_error_sq
from models import (
    Algorithm,
    ConstructionInstance,
    DenseTensor,
    HooiConfig,
    HooiTrace,
    MultilinearRank,
    RatioReport,
)

ORACLE_LIMIT = 10 ** 7


class OracleResult(NamedTuple):
    """Best axis-aligned selection: error and 0-based kept indices per mode."""
    error_sq: float
    subsets: Tuple[Tuple[int, ...], ...]


def tail_energy_bound(t: DenseTensor, r: MultilinearRank) -> float:
    """Sum over modes of the discarded squared singular values of each unfolding."""
    r.check_against(t.shape)
    return float(sum(
        np.sum(singular_values_sq(unfold(t, n))[r[n]:]) for n in range(t.order)
    ))


def svd_truncation_error(t: DenseTensor, k: int) -> float:
    """Eckart-Young optimum of a rank-k approximation of an order-2 tensor."""
    if t.order != 2:
        raise ShapeError(f"Truncated SVD needs an order-2 tensor, got order {t.order}")
    if not 1 <= k <= min(t.shape):
        raise RankError(f"Rank {k} out of range [1, {min(t.shape)}]")
    return float(np.sum(singular_values_sq(unfold(t, 0))[k:]))


def axis_aligned_oracle(t: DenseTensor, r: MultilinearRank) -> OracleResult:
    """
    Exhaustively choose R_n standard-basis directions per mode.

    Every selection is a feasible Tucker decomposition, so the minimum is an
    upper bound on the optimal rank-r error. Ties keep the lexicographically
    first selection.

    Raises:
        SizeError: more than ORACLE_LIMIT selections would be enumerated
    """
    r.check_against(t.shape)
    count = prod(comb(extent, rank) for extent, rank in zip(t.shape, r))
    if count > ORACLE_LIMIT:
        raise SizeError(f"{count} selections exceed the enumeration limit {ORACLE_LIMIT}")

    squares = t.array ** 2
    best: Optional[OracleResult] = None
    for subsets in product(*(combinations(range(extent), rank) for extent, rank in zip(t.shape, r))):
        outside = squares.copy()
        outside[np.ix_(*subsets)] = 0.0
        error_sq = float(np.sum(outside))
        if best is None or error_sq < best.error_sq:
            best = OracleResult(error_sq=error_sq, subsets=tuple(subsets))
    logger.debug("Axis-aligned oracle scanned {} selections, best {}", count, best)
    return best


def ratio_report(inst: ConstructionInstance, algorithm: Union[Algorithm, str],
                 hooi_config: Optional[HooiConfig] = None,
                 order: Optional[Sequence[int]] = None,
                 max_workers: Optional[int] = None) -> RatioReport:
    """
    Run an algorithm on an adversarial instance and compare with the competitor.

    Args:
        inst: Instance from adversarial.simple_construction / advanced_construction
        algorithm: hosvd, st_hosvd or hooi
        hooi_config: HOOI stopping rule and initialization
        order: ST-HOSVD mode order (0-based)
        max_workers: HOSVD thread pool size

    Returns:
        RatioReport with error_sq / competitor_error_sq as the ratio lower bound
    """
    if not isinstance(algorithm, Algorithm):
        algorithm = Algorithm.parse(algorithm)
    decomposer = create_decomposer(algorithm, hooi_config=hooi_config, order=order,
                                   max_workers=max_workers)
    result = decomposer.decompose(inst.tensor, inst.target_rank)
    decomposition = decomposition_of(result)
    iterations = result.iterations_run if isinstance(result, HooiTrace) else 0

    error_sq = reconstruction_error_sq(inst.tensor, decomposition)
    competitor_error_sq = reconstruction_error_sq(inst.tensor, competitor_decomposition(inst))
    report = RatioReport(
        algorithm=algorithm,
        kind=inst.kind,
        order=inst.order,
        epsilon=inst.epsilon,
        error_sq=error_sq,
        competitor_error_sq=competitor_error_sq,
        ratio_lower_bound=error_sq / competitor_error_sq,
        tail_bound=tail_energy_bound(inst.tensor, inst.target_rank),
        iterations=iterations,
    )
    logger.info(
        "{} on {} N={} eps={}: error_sq={:.6g} competitor={:.6g} ratio>={:.6g}",
        algorithm.value, inst.kind.value, inst.order, inst.epsilon,
        error_sq, competitor_error_sq, report.ratio_lower_bound,
    )
    return report
