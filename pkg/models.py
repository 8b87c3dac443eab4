"""
Core data models for tuckerbound.

This module defines the value types shared by the whole library: dense
tensors and matrices, multilinear ranks, Tucker decompositions, spectral
results, HOOI configuration and traces, adversarial instances and ratio
reports. Every array held by these types is float64 and read-only.
"""

from dataclasses import dataclass, field
from enum import Enum
from math import prod
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from errors import ConstructionError, ParameterError, RankError, ShapeError


def _frozen_array(values, ndim: Optional[int] = None) -> np.ndarray:
    array = np.array(values, dtype=np.float64, copy=True)
    if ndim is not None and array.ndim != ndim:
        raise ConstructionError(f"Expected a {ndim}-dimensional array, got {array.ndim}")
    if not np.all(np.isfinite(array)):
        raise ConstructionError("All entries must be finite")
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class DenseTensor:
    """Order-N dense real tensor stored in lexicographic (C) order."""
    array: np.ndarray

    def __post_init__(self):
        array = _frozen_array(self.array)
        if array.ndim < 1:
            raise ConstructionError("Tensor order must be at least 1")
        if any(extent < 1 for extent in array.shape):
            raise ConstructionError(f"Every extent must be positive, got {array.shape}")
        object.__setattr__(self, "array", array)

    @classmethod
    def from_flat(cls, shape: Sequence[int], values: Sequence[float]) -> "DenseTensor":
        shape = tuple(int(extent) for extent in shape)
        if not shape or any(extent < 1 for extent in shape):
            raise ConstructionError(f"Invalid shape {shape}")
        flat = np.asarray(values, dtype=np.float64).ravel()
        if flat.size != prod(shape):
            raise ConstructionError(
                f"Expected {prod(shape)} values for shape {shape}, got {flat.size}"
            )
        return cls(flat.reshape(shape))

    @property
    def shape(self) -> Tuple[int, ...]:
        return self.array.shape

    @property
    def order(self) -> int:
        return self.array.ndim

    @property
    def data(self) -> np.ndarray:
        """Flat view in lexicographic index order."""
        return self.array.reshape(-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DenseTensor):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.array, other.array)

    def __add__(self, other: "DenseTensor") -> "DenseTensor":
        if self.shape != other.shape:
            raise ShapeError(f"Cannot add shapes {self.shape} and {other.shape}")
        return DenseTensor(self.array + other.array)

    def __sub__(self, other: "DenseTensor") -> "DenseTensor":
        if self.shape != other.shape:
            raise ShapeError(f"Cannot subtract shapes {self.shape} and {other.shape}")
        return DenseTensor(self.array - other.array)

    def to_dict(self) -> dict:
        """Convert to the tensor JSON object."""
        return {"shape": list(self.shape), "data": [float(v) for v in self.data]}

    @classmethod
    def from_dict(cls, payload: dict) -> "DenseTensor":
        try:
            return cls.from_flat(payload["shape"], payload["data"])
        except (KeyError, TypeError) as e:
            raise ConstructionError(f"Malformed tensor object: {e}") from e


@dataclass(frozen=True, eq=False)
class Matrix:
    """Dense real matrix stored row-major."""
    array: np.ndarray

    def __post_init__(self):
        array = _frozen_array(self.array, ndim=2)
        if array.shape[0] < 1 or array.shape[1] < 1:
            raise ConstructionError(f"Matrix extents must be positive, got {array.shape}")
        object.__setattr__(self, "array", array)

    @classmethod
    def from_flat(cls, rows: int, cols: int, entries: Sequence[float]) -> "Matrix":
        flat = np.asarray(entries, dtype=np.float64).ravel()
        if rows < 1 or cols < 1 or flat.size != rows * cols:
            raise ConstructionError(
                f"Expected {rows}x{cols} entries, got {flat.size}"
            )
        return cls(flat.reshape(rows, cols))

    @classmethod
    def identity(cls, size: int) -> "Matrix":
        return cls(np.eye(size))

    @property
    def rows(self) -> int:
        return self.array.shape[0]

    @property
    def cols(self) -> int:
        return self.array.shape[1]

    @property
    def T(self) -> "Matrix":
        return Matrix(self.array.T)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.array.shape == other.array.shape and np.array_equal(self.array, other.array)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeError(f"Cannot multiply {self.array.shape} by {other.array.shape}")
        return Matrix(self.array @ other.array)

    def to_dict(self) -> dict:
        """Convert to the matrix JSON object."""
        return {
            "rows": self.rows,
            "cols": self.cols,
            "data": [float(v) for v in self.array.reshape(-1)],
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "Matrix":
        try:
            return cls.from_flat(int(payload["rows"]), int(payload["cols"]), payload["data"])
        except (KeyError, TypeError) as e:
            raise ConstructionError(f"Malformed matrix object: {e}") from e


@dataclass(frozen=True)
class MultilinearRank:
    """Target rank vector r = (R_1, ..., R_N)."""
    ranks: Tuple[int, ...]

    def __post_init__(self):
        ranks = tuple(int(r) for r in self.ranks)
        if not ranks or any(r < 1 for r in ranks):
            raise RankError(f"Ranks must be positive integers, got {self.ranks}")
        object.__setattr__(self, "ranks", ranks)

    @classmethod
    def parse(cls, text: str) -> "MultilinearRank":
        """Parse "R1,R2,...,RN"."""
        try:
            return cls(tuple(int(part) for part in text.split(",")))
        except ValueError as e:
            raise RankError(f"Malformed rank '{text}'") from e

    @classmethod
    def uniform(cls, value: int, order: int) -> "MultilinearRank":
        return cls((value,) * order)

    @classmethod
    def full(cls, shape: Sequence[int]) -> "MultilinearRank":
        return cls(tuple(shape))

    def __len__(self) -> int:
        return len(self.ranks)

    def __iter__(self):
        return iter(self.ranks)

    def __getitem__(self, index: int) -> int:
        return self.ranks[index]

    def check_against(self, shape: Sequence[int]) -> None:
        """Raise RankError unless 1 <= R_n <= I_n for every mode."""
        if len(self.ranks) != len(shape):
            raise RankError(f"Rank {self.ranks} has {len(self.ranks)} modes, tensor has {len(shape)}")
        for n, (r, extent) in enumerate(zip(self.ranks, shape)):
            if not 1 <= r <= extent:
                raise RankError(f"Rank R_{n + 1}={r} out of range [1, {extent}]")

    def __str__(self) -> str:
        return ",".join(str(r) for r in self.ranks)


@dataclass(frozen=True)
class TuckerDecomposition:
    """Core tensor plus N columnwise-orthonormal factor matrices."""
    core: DenseTensor
    factors: Tuple[Matrix, ...]

    def __post_init__(self):
        # Orthonormality is enforced in linalg.tucker.make_decomposition; this
        # checks only the structural pairing of core and factors.
        factors = tuple(self.factors)
        if len(factors) != self.core.order:
            raise ShapeError(
                f"Core has order {self.core.order} but {len(factors)} factors were given"
            )
        for n, factor in enumerate(factors):
            if factor.cols != self.core.shape[n]:
                raise ShapeError(
                    f"Factor {n + 1} has {factor.cols} columns, core extent is {self.core.shape[n]}"
                )
        object.__setattr__(self, "factors", factors)

    @property
    def order(self) -> int:
        return self.core.order

    @property
    def rank(self) -> MultilinearRank:
        return MultilinearRank(self.core.shape)

    @property
    def shape(self) -> Tuple[int, ...]:
        """Extents of the tensor this decomposition approximates."""
        return tuple(factor.rows for factor in self.factors)

    def to_dict(self) -> dict:
        return {
            "core": self.core.to_dict(),
            "factors": [factor.to_dict() for factor in self.factors],
        }


@dataclass(frozen=True, eq=False)
class SpectralResult:
    """Eigenpairs sorted by eigenvalue, nonincreasing."""
    values: np.ndarray
    vectors: Matrix

    @property
    def size(self) -> int:
        return self.values.shape[0]


class HooiInit(str, Enum):
    HOSVD = "hosvd"
    ST_HOSVD = "st_hosvd"

    @classmethod
    def parse(cls, text: str) -> "HooiInit":
        normalized = text.strip().lower().replace("-", "_")
        if normalized == "sthosvd":
            normalized = "st_hosvd"
        try:
            return cls(normalized)
        except ValueError as e:
            raise ParameterError(f"Unknown HOOI initialization '{text}'") from e


@dataclass(frozen=True)
class HooiConfig:
    """Stopping rule and initialization for HOOI."""
    max_iterations: int = 100
    tolerance: float = 1e-12
    init: HooiInit = HooiInit.HOSVD

    def __post_init__(self):
        if self.max_iterations < 1:
            raise ParameterError("max_iterations must be at least 1")
        if not self.tolerance >= 0:
            raise ParameterError("tolerance must be nonnegative")
        if not isinstance(self.init, HooiInit):
            object.__setattr__(self, "init", HooiInit.parse(str(self.init)))


@dataclass
class HooiTrace:
    """Result of a HOOI run."""
    decomposition: TuckerDecomposition
    errors_sq: List[float]
    iterations_run: int
    converged: bool
    factor_history: List[Tuple[Matrix, ...]] = field(default_factory=list)


class ConstructionKind(str, Enum):
    SIMPLE = "simple"
    ADVANCED = "advanced"


@dataclass(frozen=True)
class ConstructionInstance:
    """Adversarial tensor together with its named components."""
    kind: ConstructionKind
    order: int
    epsilon: float
    tensor: DenseTensor
    components: Dict[str, DenseTensor]
    target_rank: MultilinearRank
    top_value: float

    def nonzero_counts(self) -> Dict[str, int]:
        return {
            name: int(np.count_nonzero(component.array))
            for name, component in self.components.items()
        }

    def metadata(self) -> dict:
        return {
            "kind": self.kind.value,
            "order": self.order,
            "epsilon": self.epsilon,
            "target_rank": list(self.target_rank.ranks),
        }

    def to_dict(self) -> dict:
        """Convert to the instance JSON object (tensor plus metadata)."""
        return {"tensor": self.tensor.to_dict(), "metadata": self.metadata()}


class Algorithm(str, Enum):
    HOSVD = "hosvd"
    ST_HOSVD = "st_hosvd"
    HOOI = "hooi"

    @classmethod
    def parse(cls, text: str) -> "Algorithm":
        normalized = text.strip().lower().replace("-", "_")
        if normalized == "sthosvd":
            normalized = "st_hosvd"
        try:
            return cls(normalized)
        except ValueError as e:
            raise ParameterError(f"Unknown algorithm '{text}'") from e


CSV_FIELDS = (
    "algorithm",
    "N",
    "epsilon",
    "error_sq",
    "competitor_error_sq",
    "ratio_lower_bound",
    "tail_bound",
)


@dataclass(frozen=True)
class RatioReport:
    """Algorithm error against an achieved competitor error on one instance."""
    algorithm: Algorithm
    kind: ConstructionKind
    order: int
    epsilon: float
    error_sq: float
    competitor_error_sq: float
    ratio_lower_bound: float
    tail_bound: float
    iterations: int = 0

    @property
    def satisfies_upper_bound(self) -> bool:
        """Tail energy stays within N times the achieved competitor error."""
        return self.tail_bound <= self.order * self.competitor_error_sq + 1e-9

    def to_dict(self) -> dict:
        return {
            "algorithm": self.algorithm.value,
            "kind": self.kind.value,
            "N": self.order,
            "epsilon": self.epsilon,
            "error_sq": self.error_sq,
            "competitor_error_sq": self.competitor_error_sq,
            "ratio_lower_bound": self.ratio_lower_bound,
            "tail_bound": self.tail_bound,
            "iterations": self.iterations,
            "satisfies_upper_bound": self.satisfies_upper_bound,
        }

    def to_csv_row(self) -> List[str]:
        """CSV fields with 17 significant digits for every real."""
        return [
            self.algorithm.value,
            str(self.order),
            format(self.epsilon, ".17g"),
            format(self.error_sq, ".17g"),
            format(self.competitor_error_sq, ".17g"),
            format(self.ratio_lower_bound, ".17g"),
            format(self.tail_bound, ".17g"),
        ]
