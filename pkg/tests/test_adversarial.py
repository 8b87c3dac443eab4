"""
Tests for the adversarial constructions and their competitor decompositions.
"""

import math
import sys
from pathlib import Path

import numpy as np
import pytest

# Add the parent directory to Python path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from adversarial import (
    MAX_ORDER,
    advanced_construction,
    build_instance,
    competitor_decomposition,
    from_metadata,
    simple_construction,
)
from decompose import hosvd
from errors import ParameterError
from linalg.spectra import gram_left
from linalg.tensor_ops import frobenius_norm_sq, is_symmetric, unfold
from linalg.tucker import check_orthonormal, reconstruction_error_sq
from models import ConstructionKind, MultilinearRank


BUILDERS = [(simple_construction, range(2, 7)), (advanced_construction, range(3, 6))]


def all_instances(eps=0.1):
    for build, orders in BUILDERS:
        for order in orders:
            yield build(order, eps)


class TestSimpleConstruction:
    """Test cases for simple_construction."""

    def test_two_mode_matrix(self):
        inst = simple_construction(2, 0.1)
        s = math.sqrt(1.1)
        expected = np.array([[s, 0, 0], [0, 0, 1], [0, 1, 0]], dtype=float)
        np.testing.assert_array_equal(inst.tensor.array, expected)
        assert inst.target_rank == MultilinearRank((2, 2))

    def test_three_mode_slices(self):
        inst = simple_construction(3, 0.1)
        s = math.sqrt(1.1)
        slices = inst.tensor.array
        np.testing.assert_array_equal(slices[0], [[s, 0, 0], [0, 0, 0], [0, 0, 0]])
        np.testing.assert_array_equal(slices[1], [[0, 0, 0], [0, 0, 0], [0, 0, 1]])
        np.testing.assert_array_equal(slices[2], [[0, 0, 0], [0, 0, 1], [0, 1, 0]])

    @pytest.mark.parametrize("order", [2, 3, 4, 5, 6])
    @pytest.mark.parametrize("eps", [0.5, 0.1, 0.01])
    def test_mode_grams(self, order, eps):
        """Test every mode Gram matrix is diag(1+eps, 1, N-1) exactly."""
        inst = simple_construction(order, eps)
        expected = np.diag([inst.top_value ** 2, 1.0, order - 1.0])
        for n in range(order):
            np.testing.assert_array_equal(gram_left(unfold(inst.tensor, n)).array, expected)

    @pytest.mark.parametrize("order", [2, 3, 4, 5, 6])
    def test_norm(self, order):
        inst = simple_construction(order, 0.1)
        assert abs(frobenius_norm_sq(inst.tensor) - (1.1 + order)) <= 1e-12

    @pytest.mark.parametrize("order", [2, 3, 4, 5, 6])
    def test_bottom_component_alone_is_recovered(self, order):
        """Test HOSVD reconstructs the bottom component exactly."""
        bottom = simple_construction(order, 0.1).components["bottom"]
        d = hosvd(bottom, MultilinearRank.uniform(2, order))
        assert reconstruction_error_sq(bottom, d) <= 1e-24


class TestAdvancedConstruction:
    """Test cases for advanced_construction."""

    def test_three_mode_slices(self):
        inst = advanced_construction(3, 0.1)
        s = math.sqrt(1.1)
        x = inst.tensor.array
        expected = np.zeros((4, 4, 4))
        expected[0, 0, 0] = s
        expected[1, 2, 1] = expected[1, 1, 2] = s
        expected[2, 1, 1] = s
        expected[2, 3, 2] = expected[2, 2, 3] = 1.0
        expected[3, 2, 2] = 1.0
        np.testing.assert_array_equal(x, expected)
        assert inst.target_rank == MultilinearRank((3, 3, 3))

    @pytest.mark.parametrize("order", [3, 4, 5])
    def test_norm(self, order):
        eps = 0.01
        inst = advanced_construction(order, eps)
        expected = (1 + eps) + order + order * (1 + eps)
        assert abs(frobenius_norm_sq(inst.tensor) - expected) <= 1e-12

    @pytest.mark.parametrize("order", [3, 4, 5])
    def test_mode_gram(self, order):
        eps = 0.5
        inst = advanced_construction(order, eps)
        expected = np.diag([1 + eps, (order - 1) * (1 + eps), order + eps, 1.0])
        for n in range(order):
            np.testing.assert_allclose(gram_left(unfold(inst.tensor, n)).array, expected, rtol=0, atol=1e-12)


class TestInstanceInvariants:
    """Invariants shared by every generated instance."""

    def test_components_sum_to_tensor(self):
        for inst in all_instances():
            total = sum(c.array for c in inst.components.values())
            np.testing.assert_array_equal(inst.tensor.array, total)

    def test_disjoint_supports(self):
        for inst in all_instances():
            support = np.zeros(inst.tensor.shape, dtype=int)
            for component in inst.components.values():
                support += component.array != 0
            assert support.max() == 1

    def test_symmetric(self):
        for inst in all_instances():
            assert is_symmetric(inst.tensor, tol=0.0)

    def test_nonzero_counts(self):
        for inst in all_instances():
            counts = inst.nonzero_counts()
            assert counts["top"] == 1
            assert counts["bottom"] == inst.order
            if inst.kind == ConstructionKind.ADVANCED:
                assert counts["middle"] == inst.order
            else:
                assert "middle" not in counts

    def test_top_value_shared(self):
        inst = advanced_construction(4, 0.3)
        assert inst.top_value == math.sqrt(1.3)
        values = set(inst.components["middle"].array[inst.components["middle"].array != 0])
        assert values == {inst.top_value}
        assert inst.components["top"].array.max() == inst.top_value

    def test_pure_function(self):
        assert simple_construction(4, 0.2).tensor == simple_construction(4, 0.2).tensor
        assert advanced_construction(3, 0.2).tensor == advanced_construction(3, 0.2).tensor


class TestParameters:
    """Test cases for parameter validation."""

    @pytest.mark.parametrize("order,eps", [(1, 0.1), (0, 0.1), (2, 0.0), (2, -0.1),
                                           (2, float("nan")), (2, float("inf")),
                                           (MAX_ORDER + 1, 0.1), (True, 0.1), (2.5, 0.1)])
    def test_simple_rejects(self, order, eps):
        with pytest.raises(ParameterError):
            simple_construction(order, eps)

    def test_advanced_requires_three_modes(self):
        with pytest.raises(ParameterError):
            advanced_construction(2, 0.1)

    def test_build_instance(self):
        assert build_instance("simple", 3, 0.1).kind == ConstructionKind.SIMPLE
        assert build_instance(ConstructionKind.ADVANCED, 3, 0.1).kind == ConstructionKind.ADVANCED
        with pytest.raises(ParameterError):
            build_instance("spiral", 3, 0.1)


class TestMetadata:
    """Test cases for instance metadata."""

    def test_metadata_fields(self):
        inst = advanced_construction(3, 0.25)
        assert inst.metadata() == {"kind": "advanced", "order": 3, "epsilon": 0.25,
                                   "target_rank": [3, 3, 3]}
        payload = inst.to_dict()
        assert set(payload) == {"tensor", "metadata"}
        assert payload["tensor"]["shape"] == [4, 4, 4]

    def test_regenerate_from_metadata(self):
        inst = simple_construction(4, 0.01)
        again = from_metadata(inst.metadata())
        assert again.tensor == inst.tensor
        assert again.epsilon == inst.epsilon

    def test_malformed_metadata(self):
        with pytest.raises(ParameterError):
            from_metadata({"kind": "simple"})
        with pytest.raises(ParameterError):
            from_metadata({"kind": "simple", "order": 1, "epsilon": 0.1})


class TestCompetitor:
    """Test cases for competitor_decomposition."""

    @pytest.mark.parametrize("eps", [0.5, 0.1, 0.01])
    def test_error_is_top_energy(self, eps):
        for inst in all_instances(eps):
            d = competitor_decomposition(inst)
            assert abs(reconstruction_error_sq(inst.tensor, d) - (1 + eps)) <= 1e-12

    def test_factors_are_basis_selections(self):
        for inst in all_instances():
            kept = 2 if inst.kind == ConstructionKind.SIMPLE else 3
            extent = kept + 1
            for factor in competitor_decomposition(inst).factors:
                check_orthonormal(factor)
                np.testing.assert_array_equal(factor.array, np.eye(extent)[:, 1:])


if __name__ == "__main__":
    pytest.main([__file__])
