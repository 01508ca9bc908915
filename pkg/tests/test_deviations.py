import math

import numpy as np
import pytest
from hypothesis import assume, given, settings

from orbitdev import DELTA, AffineWitness, GroupKind, Polygon, Triangle, deviation, distance, norm
from orbitdev.deviations import (
    affine_deviation,
    formula_value,
    isometric_deviation,
    linear_deviation,
    orbit_sample,
    rotational_deviation,
)

from .conftest import polygon_pairs, random_polygon

GROUPS = list(GroupKind)

# 3-4-5 right triangle against the unit equilateral triangle; frozen from the
# four-parameter brute force below and the closed form (they agree to 1e-15).
AFFINE_345 = 0.29035806546998033
ISOMETRIC_345 = 3.1390226724319397


def brute_rotation(x, y, samples=1_000_000):
    theta = np.linspace(0, 2 * np.pi, samples, endpoint=False)
    a = np.exp(1j * theta)
    return float(np.sqrt(np.min(np.sum(np.abs(a[:, None] * x.vertices - y.vertices) ** 2, axis=1))))


class TestExamples:
    def test_rotation_orthogonal_inputs(self):
        x = Polygon([(1, 0), (0, 0)])
        y = Polygon([(0, 0), (0, 1)])
        r = rotational_deviation(x, y)
        assert r.value == pytest.approx(math.sqrt(2), abs=1e-12)
        assert r.witness.a == 1
        assert brute_rotation(x, y) == pytest.approx(math.sqrt(2), abs=1e-9)

    def test_rotation_quarter_turn(self):
        r = rotational_deviation(Polygon([1, 1j]), Polygon([1j, -1]))
        assert r.value <= 1e-12
        assert r.witness.a == pytest.approx(1j, abs=1e-15)

    def test_isometry_scaled_segment(self):
        r = isometric_deviation(Polygon([0, 1]), Polygon([0, 2]))
        assert r.value == pytest.approx(1 / math.sqrt(2), abs=1e-12)
        assert r.witness.a == pytest.approx(1)
        assert r.witness.b == pytest.approx(0.5)

    def test_isometry_identity(self):
        x = Polygon([(0, 0), (1, 0), (0, 1)])
        assert isometric_deviation(x, x).value <= 1e-12

    def test_linear_zero_source(self):
        r = linear_deviation(Polygon([0, 0]), Polygon([3, 4j]))
        assert r.value == 5
        assert r.witness.attained

    def test_linear_boundary_not_attained(self):
        x = Polygon([(1, 0), (1, 0)])
        y = Polygon([(1, 0), (-1, 0)])
        r = linear_deviation(x, y)
        assert r.value == pytest.approx(math.sqrt(2), abs=1e-12)
        assert not r.witness.attained
        assert r.witness.a == 0
        # every admissible multiplier does strictly worse, approaching sqrt(2) as a -> 0
        for a in (1e-3, 0.1, 1j, -2):
            assert distance(AffineWitness(a, 0)(x), y) > math.sqrt(2)

    def test_linear_scaling(self):
        r = linear_deviation(Polygon([1, 2]), Polygon([2, 4]))
        assert r.value <= 1e-12
        assert r.witness.a == pytest.approx(2)

    def test_affine_constant_source(self):
        r = affine_deviation(Polygon([5, 5]), Polygon([1, -1]))
        assert r.value == pytest.approx(math.sqrt(2), abs=1e-15)
        r = affine_deviation(Polygon([2j, 2j]), Polygon([(1, 0), (0, 1)]))
        assert r.value == pytest.approx(1.0, abs=1e-15)
        assert r.witness(Polygon([2j, 2j])) == Polygon([0.5 + 0.5j, 0.5 + 0.5j])

    def test_affine_collinear_shift(self):
        r = affine_deviation(Polygon([0, 1, 2]), Polygon([5, 7, 9]))
        assert r.value <= 1e-12
        assert r.witness.a == pytest.approx(2)
        assert r.witness.b == pytest.approx(5)

    def test_affine_boundary(self):
        r = affine_deviation(Polygon([1, -1, 0, 0]), Polygon([0, 0, 1, -1]))
        assert not r.witness.attained
        assert r.value == pytest.approx(math.sqrt(2))

    def test_right_triangle_against_delta(self):
        t = Triangle([0, 4, 3j])
        assert affine_deviation(t, DELTA).value == pytest.approx(AFFINE_345, rel=1e-12)
        assert affine_deviation(t, DELTA).value == pytest.approx(0.29035, abs=1e-5)
        assert isometric_deviation(t, DELTA).value == pytest.approx(ISOMETRIC_345, rel=1e-12)

    def test_right_triangle_brute_force(self):
        from scipy.optimize import minimize

        x, y = Triangle([0, 4, 3j]).vertices, DELTA.vertices

        def f(p):
            return np.linalg.norm((p[0] + 1j * p[1]) * x + p[2] + 1j * p[3] - y)

        best = min(
            minimize(f, start, method="Nelder-Mead", options={"xatol": 1e-13, "fatol": 1e-15, "maxiter": 20000}).fun
            for start in ([0.1, 0, 0, 0], [-0.1, 0.1, 0, 0], [0, -0.1, 0.3, 0.1])
        )
        assert best == pytest.approx(AFFINE_345, abs=1e-9)

    @pytest.mark.parametrize("group", GROUPS)
    def test_dimension_mismatch(self, group):
        with pytest.raises(ValueError):
            deviation(group, Polygon([1]), Polygon([1, 2]))

    def test_unrepresentable_multiplier(self):
        with pytest.raises(ValueError, match="overflows"):
            linear_deviation(Polygon([1e-308j]), Polygon([2j]))

    def test_dispatch_accepts_strings(self):
        x, y = Polygon([1, 2j]), Polygon([0, 1])
        assert deviation("affine", x, y) == affine_deviation(x, y)


class TestWitness:
    @pytest.mark.parametrize("group", GROUPS)
    @given(pair=polygon_pairs())
    def test_witness_attains_value(self, group, pair):
        x, y = pair
        r = deviation(group, x, y)
        if r.witness.attained:
            assert distance(r.witness(x), y) == pytest.approx(r.value, abs=1e-9)
        else:
            assert r.witness.a == 0

    @pytest.mark.parametrize("group", GROUPS)
    @given(pair=polygon_pairs())
    def test_witness_in_group(self, group, pair):
        w = deviation(group, *pair).witness
        if group in (GroupKind.ROTATION, GroupKind.ISOMETRY):
            assert abs(w.a) == pytest.approx(1, abs=1e-12)
        if group in (GroupKind.ROTATION, GroupKind.LINEAR):
            assert w.b == 0

    @pytest.mark.parametrize("group", GROUPS)
    def test_no_sampled_element_beats_witness(self, group, rng):
        for _ in range(20):
            n = int(rng.integers(1, 9))
            x, y = random_polygon(rng, n), random_polygon(rng, n)
            v = deviation(group, x, y).value
            for _ in range(50):
                g = orbit_sample(group, rng)
                assert distance(g(x), y) >= v - 1e-9


class TestProperties:
    @given(polygon_pairs())
    def test_group_monotonicity(self, pair):
        x, y = pair
        v = {g: deviation(g, x, y).value for g in GROUPS}
        tol = 1e-9 * (1 + norm(x) + norm(y))
        assert v[GroupKind.AFFINE] <= v[GroupKind.ISOMETRY] + tol
        assert v[GroupKind.AFFINE] <= v[GroupKind.LINEAR] + tol
        assert v[GroupKind.ISOMETRY] <= v[GroupKind.ROTATION] + tol
        assert v[GroupKind.LINEAR] <= v[GroupKind.ROTATION] + tol
        assert v[GroupKind.ROTATION] <= distance(x, y) + tol

    @pytest.mark.parametrize("group", GROUPS)
    @given(pair=polygon_pairs())
    def test_nonnegative_and_bounded(self, group, pair):
        x, y = pair
        v = deviation(group, x, y).value
        assert 0 <= v <= distance(x, y) + norm(y) + 1e-9

    @pytest.mark.parametrize("group", GROUPS)
    @given(pair=polygon_pairs())
    def test_formula_matches_residual(self, group, pair):
        # the radicand form loses digits near zero, so compare squares
        x, y = pair
        v = deviation(group, x, y).value
        f = formula_value(group, x, y)
        assert abs(v**2 - f**2) <= 1e-11 * (norm(x) ** 2 + norm(y) ** 2) + 1e-300

    @pytest.mark.parametrize("group", GROUPS)
    def test_orbit_invariance(self, group, rng):
        # moving x along its own orbit leaves the deviation unchanged
        for _ in range(50):
            n = int(rng.integers(2, 9))
            x, y = random_polygon(rng, n), random_polygon(rng, n)
            g = orbit_sample(group, rng)
            a, b = deviation(group, x, y).value, deviation(group, g(x), y).value
            assert a == pytest.approx(b, rel=1e-9, abs=1e-9)

    @pytest.mark.parametrize("group", [GroupKind.ROTATION, GroupKind.ISOMETRY])
    def test_isometric_groups_are_symmetric(self, group, rng):
        for _ in range(50):
            n = int(rng.integers(1, 9))
            x, y = random_polygon(rng, n), random_polygon(rng, n)
            assert deviation(group, x, y).value == pytest.approx(deviation(group, y, x).value, rel=1e-10, abs=1e-12)

    @pytest.mark.parametrize("group", GROUPS)
    @given(pair=polygon_pairs(min_size=2))
    @settings(max_examples=50)
    def test_zero_on_own_orbit(self, group, pair):
        x, _ = pair
        assume(not x.is_constant())
        rng = np.random.default_rng(0)
        g = orbit_sample(group, rng)
        assert deviation(group, x, g(x)).value <= 1e-9 * (1 + norm(g(x)))
