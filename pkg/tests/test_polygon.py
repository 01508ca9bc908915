import math

import numpy as np
import pytest
from hypothesis import given

from orbitdev.polygon import (
    AffineWitness,
    DimensionError,
    DomainError,
    Polygon,
    apply_affine,
    as_point,
    centered,
    centroid,
    distance,
    inner_product,
    norm,
)

from .conftest import group_elements, polygon_pairs, polygons


class TestConstruction:
    def test_pairs_and_complex_are_equivalent(self):
        assert Polygon([(1, 2), (3, -4)]) == Polygon([1 + 2j, 3 - 4j])

    @pytest.mark.parametrize("bad", [[(math.nan, 0)], [complex(0, math.inf)], [(1, 2, 3)], ["x"], []])
    def test_rejects_bad_vertices(self, bad):
        with pytest.raises(ValueError):
            Polygon(bad)

    def test_rejects_nan_array(self):
        with pytest.raises(ValueError):
            Polygon(np.array([1.0, np.nan]))

    def test_vertices_are_read_only(self):
        x = Polygon([1, 2])
        with pytest.raises(ValueError):
            x.vertices[0] = 5

    def test_as_point_rejects_bool(self):
        with pytest.raises(ValueError):
            as_point(True)


class TestInnerProduct:
    def test_unit_self_product(self):
        assert inner_product(Polygon([1]), Polygon([1])) == 1

    def test_orthonormal_pair(self):
        x = Polygon([(1, 0), (0, 1)])
        assert inner_product(x, x) == 2

    def test_conjugates_second_argument(self):
        assert inner_product(Polygon([1]), Polygon([1j])) == -1j

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            inner_product(Polygon([1]), Polygon([1, 2]))

    @given(polygon_pairs())
    def test_conjugate_symmetry(self, pair):
        x, y = pair
        assert inner_product(y, x) == pytest.approx(inner_product(x, y).conjugate(), abs=1e-12)

    @given(polygon_pairs())
    def test_cauchy_schwarz(self, pair):
        x, y = pair
        assert abs(inner_product(x, y)) <= norm(x) * norm(y) * (1 + 1e-12) + 1e-300


class TestNormDistance:
    @pytest.mark.parametrize(
        "verts, expected",
        [([0, 0], 0.0), ([(3, 0), (0, 4)], 5.0), ([1, 1, 1], math.sqrt(3))],
    )
    def test_norm(self, verts, expected):
        assert norm(Polygon(verts)) == pytest.approx(expected, abs=1e-15)

    @pytest.mark.parametrize(
        "x, y, expected",
        [([0], [(3, 4)], 5.0), ([1, 0], [0, 1], math.sqrt(2)), ([2 - 1j, 3], [2 - 1j, 3], 0.0)],
    )
    def test_distance(self, x, y, expected):
        assert distance(Polygon(x), Polygon(y)) == pytest.approx(expected, abs=1e-15)

    def test_distance_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            distance(Polygon([0]), Polygon([0, 0]))

    @given(polygon_pairs(), polygons())
    def test_metric_axioms(self, pair, _):
        x, y = pair
        assert distance(x, y) == distance(y, x)
        assert distance(x, x) == 0
        z = Polygon(list(y)[::-1])
        assert distance(x, z) <= distance(x, y) + distance(y, z) + 1e-12


class TestCentroid:
    def test_mean(self):
        assert centroid(Polygon([0, 2, 2j])) == pytest.approx(2 / 3 + 2j / 3)

    def test_singleton(self):
        assert centroid(Polygon([3 - 7j])) == 3 - 7j

    def test_symmetric(self):
        assert centroid(Polygon([1, -1])) == 0

    @given(polygons())
    def test_centered_has_zero_centroid(self, x):
        assert abs(centroid(centered(x))) <= 1e-12 * max(norm(x), 1.0)

    @given(polygons())
    def test_pythagorean_split(self, x):
        lhs = norm(centered(x)) ** 2 + len(x) * abs(centroid(x)) ** 2
        assert lhs == pytest.approx(norm(x) ** 2, rel=1e-10, abs=1e-12)


class TestApplyAffine:
    def test_identity(self):
        x = Polygon([1 + 1j, -2])
        assert apply_affine(AffineWitness(), x) == x

    def test_quarter_turn(self):
        assert apply_affine(AffineWitness(1j, 0), Polygon([1])) == Polygon([1j])

    def test_scale_and_shift(self):
        assert apply_affine(AffineWitness(2, 1), Polygon([0, 1])) == Polygon([1, 3])

    def test_boundary_witness_is_constant_map(self):
        w = AffineWitness(0, 2j, attained=False)
        assert apply_affine(w, Polygon([1, 5, -3])) == Polygon([2j, 2j, 2j])

    def test_witness_consistency(self):
        with pytest.raises(DomainError):
            AffineWitness(0, 0)
        with pytest.raises(DomainError):
            AffineWitness(1, 0, attained=False)

    @given(polygon_pairs(), group_elements())
    def test_distance_scales_by_modulus(self, pair, g):
        x, y = pair
        w = AffineWitness(*g)
        assert distance(w(x), w(y)) == pytest.approx(abs(w.a) * distance(x, y), rel=1e-10, abs=1e-10)

    @given(polygons(), group_elements())
    def test_centroid_is_equivariant(self, x, g):
        w = AffineWitness(*g)
        expected = w.a * centroid(x) + w.b
        assert abs(centroid(w(x)) - expected) <= 1e-12 * max(abs(expected), abs(w.a) * norm(x), 1.0)
