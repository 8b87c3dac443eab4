"""
Adversarial tensor constructions for tuckerbound.

Two symmetric families on which greedy Tucker algorithms lose a factor of
N against an explicit competitor decomposition:

- simple (shape 3^N, rank (2,...,2)): defeats HOSVD
- advanced (shape 4^N, rank (3,...,3)): defeats ST-HOSVD and HOOI

Generators are pure functions of (kind, N, epsilon). The value
sqrt(1 + epsilon) is computed once and reused for every nonzero.
"""

import math
from typing import Callable, Dict

import numpy as np

from errors import ParameterError
from linalg.tucker import selection_decomposition
from models import (
    ConstructionInstance,
    ConstructionKind,
    DenseTensor,
    MultilinearRank,
    TuckerDecomposition,
)

# 4^12 entries is the largest tensor these generators will allocate.
MAX_ORDER = 12


def _check_parameters(n_order: int, eps: float, min_order: int) -> None:
    if not isinstance(n_order, (int, np.integer)) or isinstance(n_order, bool):
        raise ParameterError(f"Order must be an integer, got {n_order!r}")
    if n_order < min_order:
        raise ParameterError(f"Order must be at least {min_order}, got {n_order}")
    if n_order > MAX_ORDER:
        raise ParameterError(f"Order must be at most {MAX_ORDER}, got {n_order}")
    if not (isinstance(eps, (int, float, np.floating)) and math.isfinite(eps) and eps > 0):
        raise ParameterError(f"Epsilon must be a positive finite number, got {eps!r}")


def _one_off_entries(n_order: int, extent: int, base: int, odd: int, value: float) -> np.ndarray:
    """Tensor with `value` at every index equal to `base` except one position equal to `odd`."""
    array = np.zeros((extent,) * n_order)
    for position in range(n_order):
        index = [base] * n_order
        index[position] = odd
        array[tuple(index)] = value
    return array


def _top_component(n_order: int, extent: int, top_value: float) -> np.ndarray:
    array = np.zeros((extent,) * n_order)
    array[(0,) * n_order] = top_value
    return array


def simple_construction(n_order: int, eps: float) -> ConstructionInstance:
    """
    Build X = Y + Z of shape 3^N.

    Y holds sqrt(1+eps) at (1,...,1); Z holds 1 at every index that is 2 in
    exactly one position and 3 elsewhere (1-based).
    """
    _check_parameters(n_order, eps, min_order=2)
    eps = float(eps)
    top_value = math.sqrt(1.0 + eps)
    top = DenseTensor(_top_component(n_order, 3, top_value))
    bottom = DenseTensor(_one_off_entries(n_order, 3, base=2, odd=1, value=1.0))
    return ConstructionInstance(
        kind=ConstructionKind.SIMPLE,
        order=n_order,
        epsilon=eps,
        tensor=top + bottom,
        components={"top": top, "bottom": bottom},
        target_rank=MultilinearRank.uniform(2, n_order),
        top_value=top_value,
    )


def advanced_construction(n_order: int, eps: float) -> ConstructionInstance:
    """
    Build X = Y + Z + L of shape 4^N.

    Y holds sqrt(1+eps) at (1,...,1); Z holds 1 at indices that are 4 in one
    position and 3 elsewhere; L holds sqrt(1+eps) at indices that are 3 in
    one position and 2 elsewhere (1-based).
    """
    _check_parameters(n_order, eps, min_order=3)
    eps = float(eps)
    top_value = math.sqrt(1.0 + eps)
    top = DenseTensor(_top_component(n_order, 4, top_value))
    bottom = DenseTensor(_one_off_entries(n_order, 4, base=2, odd=3, value=1.0))
    middle = DenseTensor(_one_off_entries(n_order, 4, base=1, odd=2, value=top_value))
    return ConstructionInstance(
        kind=ConstructionKind.ADVANCED,
        order=n_order,
        epsilon=eps,
        tensor=top + bottom + middle,
        components={"top": top, "bottom": bottom, "middle": middle},
        target_rank=MultilinearRank.uniform(3, n_order),
        top_value=top_value,
    )


GENERATORS: Dict[ConstructionKind, Callable[[int, float], ConstructionInstance]] = {
    ConstructionKind.SIMPLE: simple_construction,
    ConstructionKind.ADVANCED: advanced_construction,
}


def build_instance(kind, n_order: int, eps: float) -> ConstructionInstance:
    """Dispatch on the construction kind ("simple" or "advanced")."""
    try:
        kind = ConstructionKind(kind)
    except ValueError as e:
        raise ParameterError(f"Unknown construction kind '{kind}'") from e
    return GENERATORS[kind](n_order, eps)


def from_metadata(metadata: dict) -> ConstructionInstance:
    """Regenerate an instance from its serialized metadata object."""
    try:
        return build_instance(metadata["kind"], int(metadata["order"]), float(metadata["epsilon"]))
    except (KeyError, TypeError) as e:
        raise ParameterError(f"Malformed instance metadata: {e}") from e


def competitor_decomposition(inst: ConstructionInstance) -> TuckerDecomposition:
    """
    Explicit decomposition that drops only the top component.

    Simple instances keep [e_2 e_3] in every mode, advanced instances keep
    [e_2 e_3 e_4]; the core is optimal for the instance tensor.
    """
    kept = (1, 2) if inst.kind == ConstructionKind.SIMPLE else (1, 2, 3)
    return selection_decomposition(inst.tensor, [kept] * inst.order)
