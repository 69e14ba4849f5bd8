import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from avd import (
    BivariatePoly,
    Point,
    ZeroPolynomial,
    build_edge,
    effective_degree,
    evaluate,
    gradient,
    normalize,
)

UNIT_CIRCLE = BivariatePoly.from_terms({(2, 0): 1.0, (0, 2): 1.0, (0, 0): -1.0})
NODAL_CUBIC = BivariatePoly.from_terms({(0, 2): 1.0, (3, 0): -1.0, (2, 0): -1.0})


def random_poly(rng) -> BivariatePoly:
    c = np.zeros((4, 4))
    for i in range(4):
        for j in range(4 - i):
            c[i, j] = rng.uniform(-3, 3)
    return BivariatePoly(c)


class TestEvaluate:
    def test_unit_circle_point(self):
        assert evaluate(UNIT_CIRCLE, Point(1.0, 0.0)) == 0.0

    def test_node_showcase_vanishes_at_singularity(self, node_config):
        f = build_edge(node_config).poly
        assert abs(evaluate(f, Point(-1.0, 2.0))) <= 1e-12

    def test_plain_linear(self):
        f = BivariatePoly.from_terms({(0, 1): 1.0})
        assert evaluate(f, Point(5.0, 3.0)) == 3.0

    def test_linear_in_coefficients(self, rng):
        f = random_poly(rng)
        g = random_poly(rng)
        both = BivariatePoly(2.0 * f.coeffs + 3.0 * g.coeffs)
        for _ in range(20):
            p = Point(*rng.uniform(-4, 4, 2))
            want = 2.0 * evaluate(f, p) + 3.0 * evaluate(g, p)
            assert evaluate(both, p) == pytest.approx(want, rel=1e-12, abs=1e-12)


class TestGradient:
    def test_node_showcase_gradient_vanishes(self, node_config):
        f = build_edge(node_config).poly
        gx, gy = gradient(f, Point(-1.0, 2.0))
        assert abs(gx) <= 1e-12 and abs(gy) <= 1e-12

    def test_nodal_cubic_origin(self):
        assert gradient(NODAL_CUBIC, Point(0.0, 0.0)) == (0.0, 0.0)

    def test_circle_gradient(self):
        assert gradient(UNIT_CIRCLE, Point(1.0, 0.0)) == (2.0, 0.0)

    def test_matches_central_differences(self, rng):
        h = 1e-6
        for _ in range(100):
            f = random_poly(rng)
            pts = rng.uniform(-3, 3, (100, 2))
            for x, y in pts[rng.integers(0, 100, size=5)]:
                gx, gy = gradient(f, Point(x, y))
                fd_x = (float(f(x + h, y)) - float(f(x - h, y))) / (2 * h)
                fd_y = (float(f(x, y + h)) - float(f(x, y - h))) / (2 * h)
                assert abs(gx - fd_x) <= 1e-5
                assert abs(gy - fd_y) <= 1e-5


class TestEffectiveDegree:
    def test_node_showcase_is_cubic(self, node_config):
        assert effective_degree(build_edge(node_config).poly) == 3

    def test_congruent_parallel_conic(self):
        f = BivariatePoly.from_terms(
            {(2, 0): 1.0, (1, 1): -2.0, (0, 2): -1.0, (0, 1): 2.0, (0, 0): -1.0}
        )
        assert effective_degree(f) == 2

    def test_plain_line(self):
        assert effective_degree(BivariatePoly.from_terms({(1, 0): 1, (0, 1): 1})) == 1

    def test_constant(self):
        assert effective_degree(BivariatePoly.from_terms({(0, 0): 2.0})) == 0

    def test_relative_threshold(self):
        f = BivariatePoly.from_terms({(0, 3): 1e-14, (0, 1): 1.0})
        assert effective_degree(f) == 1
        assert effective_degree(f, tol=0.0) == 3


class TestNormalize:
    def test_scales_to_unit_max(self):
        f = BivariatePoly.from_terms({(2, 0): 2.0, (0, 1): 4.0})
        g = normalize(f)
        assert np.abs(g.coeffs).max() == 1.0
        assert g.coefficient(2, 0) == 0.5

    def test_sign_canonicalization(self):
        f = BivariatePoly.from_terms({(1, 0): -1.0, (0, 1): -1.0})
        g = normalize(f)
        assert g.coefficient(1, 0) == 1.0
        assert g.coefficient(0, 1) == 1.0

    @settings(max_examples=100, derandomize=True)
    @given(st.integers(min_value=0, max_value=2**32 - 1))
    def test_idempotent_and_proportional(self, seed):
        rng = np.random.default_rng(seed)
        f = random_poly(rng)
        g = normalize(f)
        assert np.array_equal(normalize(g).coeffs, g.coeffs)
        # proportionality => identical zero set
        ratio = np.abs(f.coeffs).max()
        sign = 1.0 if np.allclose(f.coeffs, ratio * g.coeffs) else -1.0
        assert np.allclose(f.coeffs, sign * ratio * g.coeffs, rtol=0, atol=1e-14 * ratio)


class TestConstruction:
    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomial):
            BivariatePoly(np.zeros((4, 4)))

    def test_degree_overflow_rejected(self):
        c = np.zeros((4, 4))
        c[2, 2] = 1.0
        with pytest.raises(ValueError):
            BivariatePoly(c)

    def test_nonfinite_rejected(self):
        c = np.zeros((4, 4))
        c[0, 0] = np.inf
        with pytest.raises(ValueError):
            BivariatePoly(c)

    def test_coefficients_read_only(self):
        f = BivariatePoly.from_terms({(0, 0): 1.0})
        with pytest.raises(ValueError):
            f.coeffs[0, 0] = 2.0
