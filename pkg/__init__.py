"""
tuckerbound - Main Module

A dense-tensor Tucker decomposition library (HOSVD, ST-HOSVD, HOOI) with
a deterministic eigensolver, adversarial instance generators, and ratio
reports that reproduce the worst-case N/(1+eps) lower bounds.
"""

import os
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from loguru import logger

from adversarial import build_instance
from decompose import create_decomposer, decomposition_of
from models import (
    Algorithm,
    ConstructionInstance,
    DenseTensor,
    HooiConfig,
    HooiInit,
    HooiTrace,
    MultilinearRank,
    RatioReport,
    TuckerDecomposition,
)
from linalg.tucker import reconstruction_error_sq
from report.file_writer import FileWriter
from report.verifier import ratio_report, tail_energy_bound


class TuckerBound:
    """Main tuckerbound class bundling configuration and the library operations."""

    def __init__(self, hooi_max_iter: Optional[int] = None,
                 hooi_tol: Optional[float] = None,
                 hooi_init: Optional[str] = None,
                 workers: Optional[int] = None):
        """
        Initialize with HOOI defaults and HOSVD parallelism.

        Args:
            hooi_max_iter: HOOI outer iteration cap (default: 100)
            hooi_tol: HOOI relative change threshold on error_sq (default: 1e-12)
            hooi_init: HOOI initialization, "hosvd" or "st_hosvd" (default: hosvd)
            workers: Thread pool size for HOSVD per-mode solves (default: 1)
        """
        # Configure with environment variable support
        if workers is not None:
            self.workers = workers
        else:
            try:
                self.workers = int(os.environ.get('TUCKER_WORKERS', '1'))
                if self.workers < 1:
                    raise ValueError(self.workers)
            except ValueError:
                # Use defaults if environment variables are invalid
                logger.warning("Ignoring invalid TUCKER_WORKERS={!r}", os.environ.get('TUCKER_WORKERS'))
                self.workers = 1
        self.hooi_config = self._hooi_config(hooi_max_iter, hooi_tol, hooi_init)
        self.file_writer = FileWriter()

    @staticmethod
    def _hooi_config(max_iter: Optional[int], tol: Optional[float],
                     init: Optional[str]) -> HooiConfig:
        """Constructor values win; each invalid environment value falls back to its default."""
        defaults = HooiConfig()
        env_values = {}
        for key, name, convert in (
            ('max_iterations', 'TUCKER_HOOI_MAX_ITER', int),
            ('tolerance', 'TUCKER_HOOI_TOL', float),
            ('init', 'TUCKER_HOOI_INIT', HooiInit.parse),
        ):
            text = os.environ.get(name)
            if text is None:
                continue
            try:
                value = convert(text)
                HooiConfig(**{key: value})
            except ValueError:
                logger.warning("Ignoring invalid {}={!r}", name, text)
                continue
            env_values[key] = value

        return HooiConfig(
            max_iterations=max_iter if max_iter is not None
            else env_values.get('max_iterations', defaults.max_iterations),
            tolerance=tol if tol is not None else env_values.get('tolerance', defaults.tolerance),
            init=HooiInit.parse(init) if init is not None else env_values.get('init', defaults.init),
        )

    def generate(self, kind: str, order: int, epsilon: float) -> ConstructionInstance:
        """Build the simple or advanced adversarial instance."""
        return build_instance(kind, order, epsilon)

    def decompose(self, t: DenseTensor, r: MultilinearRank, algorithm: Algorithm,
                  order: Optional[Sequence[int]] = None,
                  hooi_config: Optional[HooiConfig] = None) -> Tuple[TuckerDecomposition, Dict]:
        """
        Run one algorithm and summarize its result.

        Args:
            t: Tensor to decompose
            r: Target multilinear rank
            algorithm: hosvd, st_hosvd or hooi
            order: ST-HOSVD mode order (0-based)
            hooi_config: Overrides the configured HOOI settings

        Returns:
            The decomposition and a summary with error_sq, tail_bound and,
            for HOOI, iterations
        """
        decomposer = create_decomposer(
            algorithm,
            hooi_config=hooi_config or self.hooi_config,
            order=order,
            max_workers=self.workers,
        )
        result = decomposer.decompose(t, r)
        decomposition = decomposition_of(result)
        summary = {
            "algorithm": algorithm.value,
            "rank": list(r.ranks),
            "error_sq": reconstruction_error_sq(t, decomposition),
            "tail_bound": tail_energy_bound(t, r),
        }
        if isinstance(result, HooiTrace):
            summary["iterations"] = result.iterations_run
            summary["converged"] = result.converged
            summary["errors_sq"] = list(result.errors_sq)
        return decomposition, summary

    def verify(self, inst: ConstructionInstance, algorithm: Algorithm,
               hooi_config: Optional[HooiConfig] = None) -> RatioReport:
        """Ratio report for one instance and algorithm."""
        return ratio_report(inst, algorithm, hooi_config=hooi_config or self.hooi_config,
                            max_workers=self.workers)

    def sweep(self, kind: str, algorithm: Algorithm, orders: Iterable[int],
              epsilons: Iterable[float]) -> List[RatioReport]:
        """Ratio reports for every (N, eps) cell, N ascending then eps ascending."""
        reports = []
        for order in sorted(set(orders)):
            for epsilon in sorted(set(epsilons)):
                reports.append(self.verify(self.generate(kind, order, epsilon), algorithm))
        return reports
