import math
import random

import mpmath
import pytest
from hypothesis import given, strategies as st

from cctrig.errors import ChartDomainError, GeometryMismatch, ZeroTangent
from cctrig.surface import (
    PolarCoordinate,
    SurfacePoint,
    distance,
    minkowski,
    origin,
    parallel_translate,
    polar_to_cartesian,
    tangent_angle_at,
)

GEOMS = (-1, 0, 1)


def chart_radius(g):
    return st.floats(0, 3.0) if g != 1 else st.floats(0, math.pi - 1e-3)


def random_point(rng, g, rmax=2.0):
    r = rng.uniform(0, min(rmax, math.pi - 1e-3) if g == 1 else rmax)
    return polar_to_cartesian(g, (r, rng.uniform(-math.pi, math.pi)))


class TestPolar:
    def test_examples(self):
        p = polar_to_cartesian(1, (math.pi / 2, 0.0))
        assert p.as_tuple() == pytest.approx((1.0, 0.0, 0.0), abs=1e-16)
        p = polar_to_cartesian(0, (2.0, math.pi / 2))
        assert p.as_tuple() == pytest.approx((0.0, 2.0, 1.0), abs=1e-15)
        assert p.z == 1.0
        p = polar_to_cartesian(-1, PolarCoordinate(1.0, 0.0))
        assert p.as_tuple() == pytest.approx((1.1752011936438014, 0.0, 1.5430806348152437), rel=1e-15)
        assert p.x**2 + p.y**2 - p.z**2 == pytest.approx(-1.0, abs=1e-15)

    def test_chart_domain(self):
        with pytest.raises(ChartDomainError):
            polar_to_cartesian(1, (math.pi, 0.0))
        with pytest.raises(ChartDomainError):
            PolarCoordinate(-0.1, 0.0)
        polar_to_cartesian(-1, (10.0, 0.0))

    def test_rejects_other_curvatures(self):
        with pytest.raises(ValueError):
            polar_to_cartesian(2, (1.0, 0.0))
        with pytest.raises(ValueError):
            SurfacePoint(0, 0, 1, 0.5)

    @pytest.mark.parametrize("g", GEOMS)
    @given(data=st.data())
    def test_on_surface_and_chart_consistency(self, g, data):
        r = data.draw(chart_radius(g))
        theta = data.draw(st.floats(-7, 7))
        p = polar_to_cartesian(g, (r, theta))
        assert p.surface_residual() <= 1e-12
        assert distance(p, origin(g)) == pytest.approx(r, abs=1e-12)


class TestDistance:
    def test_examples(self):
        assert distance(SurfacePoint(1, 0, 0, 1), SurfacePoint(0, 0, 1, 1)) == pytest.approx(math.pi / 2, abs=1e-16)
        q = SurfacePoint(math.sinh(1), 0, math.cosh(1), -1)
        assert distance(origin(-1), q) == pytest.approx(1.0, abs=1e-15)
        assert distance(SurfacePoint(1, 2, 1, 0), SurfacePoint(4, 6, 1, 0)) == 5.0

    def test_mismatch(self):
        with pytest.raises(GeometryMismatch):
            distance(origin(1), origin(-1))

    def test_no_nan_at_coincidence_or_antipode(self):
        p = polar_to_cartesian(1, (0.7, 0.2))
        assert distance(p, p) == 0.0
        anti = SurfacePoint(-p.x, -p.y, -p.z, 1)
        assert distance(p, anti) == pytest.approx(math.pi, abs=1e-15)
        h = polar_to_cartesian(-1, (2.0, 0.3))
        assert distance(h, h) == 0.0

    @pytest.mark.parametrize("g", [-1, 1])
    def test_matches_inner_product_formula(self, g):
        # cos d = p.q on the sphere, cosh d = -p1q1 - p2q2 + p3q3 on the hyperboloid
        rng = random.Random(11)
        for _ in range(200):
            p, q = random_point(rng, g, 1.2), random_point(rng, g, 1.2)
            with mpmath.workdps(40):
                P = [mpmath.mpf(v) for v in p.as_tuple()]
                Q = [mpmath.mpf(v) for v in q.as_tuple()]
                if g == 1:
                    ref = mpmath.acos(sum(a * b for a, b in zip(P, Q)) / (mpmath.sqrt(sum(a * a for a in P)) * mpmath.sqrt(sum(b * b for b in Q))))
                else:
                    ref = mpmath.acosh(max(-P[0] * Q[0] - P[1] * Q[1] + P[2] * Q[2], 1))
            assert distance(p, q) == pytest.approx(float(ref), abs=1e-12)


class TestTranslate:
    def test_examples(self):
        p = parallel_translate(SurfacePoint(0.3, -1.2, 1.0, 0), 2.5)
        assert p.as_tuple() == (2.8, -1.2, 1.0)
        p = parallel_translate(origin(1), math.pi / 2)
        assert p.as_tuple() == pytest.approx((1.0, 0.0, 0.0), abs=1e-16)
        p = parallel_translate(origin(-1), 1.0)
        assert p.as_tuple() == pytest.approx((math.sinh(1), 0.0, math.cosh(1)), rel=1e-15)

    @pytest.mark.parametrize("g", GEOMS)
    def test_isometry_and_closure(self, g):
        rng = random.Random(1000 + g)
        for _ in range(300):
            p, q = random_point(rng, g), random_point(rng, g)
            d = rng.uniform(-3, 3)
            tp, tq = parallel_translate(p, d), parallel_translate(q, d)
            assert abs(distance(p, q) - distance(tp, tq)) <= 1e-11
            if g != -1:
                assert tp.surface_residual() <= 1e-12
            else:
                # a translated point sits up to cosh(5) from the origin; the
                # defect is measured relative to z^2
                assert tp.surface_residual() <= 1e-15 * tp.z * tp.z + 1e-12

    @pytest.mark.parametrize("g", GEOMS)
    def test_group_law(self, g):
        rng = random.Random(2000 + g)
        for _ in range(300):
            p = random_point(rng, g, 1.0)
            d, e = rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)
            two = parallel_translate(parallel_translate(p, d), e)
            one = parallel_translate(p, d + e)
            assert two.as_tuple() == pytest.approx(one.as_tuple(), abs=1e-12)

    @pytest.mark.parametrize("g", GEOMS)
    @given(st.floats(-2.5, 2.5), st.floats(-3, 3))
    def test_line_is_fixed(self, g, x, d):
        p = polar_to_cartesian(g, (abs(x) if g != 1 else min(abs(x), 3.0), 0.0 if x >= 0 else math.pi))
        p = SurfacePoint(p.x, 0.0, p.z, g)
        assert parallel_translate(p, d).y == 0.0

    @pytest.mark.parametrize("g", GEOMS)
    def test_inverse(self, g):
        p = polar_to_cartesian(g, (0.8, 1.1))
        back = parallel_translate(parallel_translate(p, 1.3), -1.3)
        assert back.as_tuple() == pytest.approx(p.as_tuple(), abs=1e-14)


class TestTangentAngle:
    def test_examples(self):
        plane = tangent_angle_at(origin(0), SurfacePoint(1, 0, 1, 0), SurfacePoint(0, 1, 1, 0))
        assert plane == pytest.approx(math.pi / 2, abs=1e-16)
        sphere = tangent_angle_at(origin(1), SurfacePoint(1, 0, 0, 1), SurfacePoint(0, 1, 0, 1))
        assert sphere == pytest.approx(math.pi / 2, abs=1e-16)
        o = origin(-1)
        hyp = tangent_angle_at(o, parallel_translate(o, 1.0), polar_to_cartesian(-1, (1.0, math.pi / 3)))
        assert hyp == pytest.approx(math.pi / 3, abs=1e-15)

    @pytest.mark.parametrize("g", GEOMS)
    def test_angle_at_origin_is_polar_angle_difference(self, g):
        rng = random.Random(3000 + g)
        for _ in range(200):
            t1, t2 = rng.uniform(-math.pi, math.pi), rng.uniform(-math.pi, math.pi)
            q1 = polar_to_cartesian(g, (rng.uniform(0.1, 2.5), t1))
            q2 = polar_to_cartesian(g, (rng.uniform(0.1, 2.5), t2))
            diff = abs(t1 - t2)
            expected = min(diff, 2 * math.pi - diff)
            assert tangent_angle_at(origin(g), q1, q2) == pytest.approx(expected, abs=1e-13)

    @pytest.mark.parametrize("g", GEOMS)
    def test_invariant_under_translation(self, g):
        rng = random.Random(4000 + g)
        for _ in range(200):
            v, q1, q2 = (random_point(rng, g, 1.5) for _ in range(3))
            d = rng.uniform(-3, 3)
            before = tangent_angle_at(v, q1, q2)
            after = tangent_angle_at(*(parallel_translate(p, d) for p in (v, q1, q2)))
            assert after == pytest.approx(before, abs=1e-10)

    def test_far_hyperbolic_vertex_matches_high_precision(self):
        # vertex about 5 units out: the ambient projection would lose ~z^2 digits
        v = polar_to_cartesian(-1, (4.9, 2.0))
        q1 = polar_to_cartesian(-1, (4.95, -1.0))
        q2 = origin(-1)
        with mpmath.workdps(50):
            V = [mpmath.mpf(x) for x in v.as_tuple()]

            def tan(q):
                Q = [mpmath.mpf(x) for x in q.as_tuple()]
                k = minkowski(V, Q)
                return [Q[i] + k * V[i] for i in range(3)]

            T1, T2 = tan(q1), tan(q2)
            ref = mpmath.acos(minkowski(T1, T2) / mpmath.sqrt(minkowski(T1, T1) * minkowski(T2, T2)))
        assert tangent_angle_at(v, q1, q2) == pytest.approx(float(ref), abs=1e-14)

    def test_zero_tangent(self):
        p = polar_to_cartesian(1, (1.0, 0.5))
        q = polar_to_cartesian(1, (0.4, 2.0))
        with pytest.raises(ZeroTangent):
            tangent_angle_at(p, p, q)
        with pytest.raises(ZeroTangent):
            tangent_angle_at(p, SurfacePoint(-p.x, -p.y, -p.z, 1), q)
