"""
Randomized property suite.

200 random tensors with shapes drawn from {2,3,4}^N, N in {2,3,4}, entries
uniform on [-1, 1] and random valid ranks, all from one fixed seed.
"""

import sys
from pathlib import Path

import numpy as np
import pytest

# Add the parent directory to Python path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from decompose import hooi, hosvd, st_hosvd
from linalg.tensor_ops import frobenius_norm_sq
from linalg.tucker import reconstruction_error_sq
from models import DenseTensor, MultilinearRank
from report.verifier import tail_energy_bound

SUITE_SIZE = 200
SUITE_SEED = 20240601


@pytest.fixture(scope="module")
def suite():
    rng = np.random.default_rng(SUITE_SEED)
    cases = []
    for _ in range(SUITE_SIZE):
        order = int(rng.integers(2, 5))
        shape = tuple(int(e) for e in rng.integers(2, 5, size=order))
        ranks = tuple(int(rng.integers(1, e + 1)) for e in shape)
        cases.append((DenseTensor(rng.uniform(-1, 1, shape)), MultilinearRank(ranks)))
    return cases


class TestHosvdBounds:
    """Tail-energy bound and error decomposition on random inputs."""

    def test_error_within_tail_bound(self, suite):
        for t, r in suite:
            error_sq = reconstruction_error_sq(t, hosvd(t, r))
            assert error_sq <= tail_energy_bound(t, r) + 1e-10

    def test_st_hosvd_within_tail_bound(self, suite):
        for t, r in suite:
            error_sq = reconstruction_error_sq(t, st_hosvd(t, r))
            assert error_sq <= tail_energy_bound(t, r) + 1e-10

    def test_error_decomposition(self, suite):
        for t, r in suite:
            d = hosvd(t, r)
            expected = frobenius_norm_sq(t) - frobenius_norm_sq(d.core)
            actual = reconstruction_error_sq(t, d)
            assert abs(actual - expected) <= 1e-10 * max(1.0, abs(expected))


class TestHooiMonotonicity:
    """HOOI never increases the error."""

    @pytest.mark.timeout(300)
    def test_nonincreasing(self, suite):
        for t, r in suite:
            trace = hooi(t, r)
            for before, after in zip(trace.errors_sq, trace.errors_sq[1:]):
                assert after <= before + 1e-12
            assert trace.errors_sq[-1] <= trace.errors_sq[0] + 1e-12


if __name__ == "__main__":
    pytest.main([__file__])
