import math
import random

import pytest
from hypothesis import given, strategies as st

from conftest import HYP_RIGHT_HYPOTENUSE
from cctrig.errors import InvalidTriangle, SphericalDomain
from cctrig.solver import Mode, SolveRequest, solve, solve_sas, solve_sss, validate_sides

HALF_PI = math.pi / 2


def sas_requests(g, n, seed):
    rng = random.Random(seed)
    hi = math.pi - 0.01 if g == 1 else 5.0
    for _ in range(n):
        yield rng.uniform(0.01, hi), rng.uniform(0.01, hi), rng.uniform(0.01, math.pi - 0.01)


class TestSAS:
    def test_euclid(self):
        res = solve_sas(0, 4, 3, HALF_PI)
        t = res.triangle
        assert t.sides.a == 5.0
        assert t.angles.B == pytest.approx(0.9272952180016122, abs=1e-15)
        assert t.angles.C == pytest.approx(0.6435011087932844, abs=1e-15)
        assert res.ok

    def test_sphere_isosceles(self):
        t = solve_sas(1, math.pi / 4, math.pi / 4, HALF_PI).triangle
        assert t.sides.a == pytest.approx(math.pi / 3, abs=1e-15)
        assert t.angles.B == pytest.approx(t.angles.C, abs=1e-15)

    def test_hyperbolic(self):
        res = solve_sas(-1, 1, 1, HALF_PI)
        assert res.triangle.sides.a == pytest.approx(HYP_RIGHT_HYPOTENUSE, abs=1e-15)
        assert res.ok

    def test_errors(self):
        with pytest.raises(SphericalDomain):
            solve_sas(1, 3.5, 1.0, 1.0)
        with pytest.raises(InvalidTriangle):
            solve_sas(0, 1.0, 1.0, 0.0)

    @pytest.mark.parametrize("g", [-1, 0, 1])
    @given(st.floats(0.01, 3.0), st.floats(0.01, 3.1))
    def test_isosceles_symmetry(self, g, b, A):
        t = solve_sas(g, b, b, A).triangle
        assert abs(t.angles.B - t.angles.C) <= 1e-12

    @pytest.mark.parametrize("g", [-1, 0, 1])
    def test_monotone_in_angle(self, g):
        for b, c in [(0.3, 0.5), (1.0, 1.0), (2.0, 0.7), (2.9, 3.0)]:
            sides = [solve_sas(g, b, c, 0.01 + i * (math.pi - 0.02) / 60).triangle.sides.a for i in range(61)]
            assert all(x < y for x, y in zip(sides, sides[1:]))


class TestSSS:
    def test_examples(self):
        assert solve_sss(0, 5, 4, 3).triangle.angles.A == pytest.approx(HALF_PI, abs=1e-12)
        oct_ = solve_sss(1, HALF_PI, HALF_PI, HALF_PI).triangle.angles
        assert oct_.as_tuple() == pytest.approx((HALF_PI,) * 3, abs=1e-15)
        with pytest.raises(InvalidTriangle):
            solve_sss(0, 10, 1, 1)

    def test_residual_summary_within_tolerance(self):
        res = solve_sss(-1, 2.0, 3.0, 4.0)
        assert res.residual_summary <= 1e-9 and res.ok
        strict = solve_sss(-1, 2.0, 3.0, 4.0, tolerance=0.0)
        assert strict.ok == (strict.residual_summary <= 0.0)

    @pytest.mark.parametrize("g", [-1, 0, 1])
    def test_sas_sss_round_trip(self, g):
        for b, c, A in sas_requests(g, 300, seed=20 + g):
            try:
                sas = solve_sas(g, b, c, A)
            except InvalidTriangle:
                continue
            s = sas.triangle.sides
            assert solve_sss(g, s.a, s.b, s.c).triangle.angles.A == pytest.approx(A, abs=1e-9)


def test_request_dispatch():
    r = solve(SolveRequest(0, Mode.SSS, {"a": 5, "b": 4, "c": 3}))
    assert r.triangle.angles.A == pytest.approx(HALF_PI)
    r = solve(SolveRequest(0, "sas", {"b": 4, "c": 3, "A": HALF_PI}))
    assert r.triangle.sides.a == 5.0
    with pytest.raises(InvalidTriangle, match="missing"):
        solve(SolveRequest(0, Mode.SAS, {"b": 4}))


class TestValidate:
    def test_ok(self):
        v = validate_sides(-1, 1, 1, 1)
        assert v.ok and v.reason is None

    def test_side_bound(self):
        v = validate_sides(1, 3.2, 0.1, 0.1)
        assert not v.ok
        assert "spherical_side_bound" in [code for code, _ in v.failures]

    def test_perimeter(self):
        v = validate_sides(1, 3.0, 3.0, 0.5)
        assert [code for code, _ in v.failures] == ["spherical_perimeter_bound"]
        # pi/2 + pi/2 + 2.9 = 6.04 < 2 pi: a valid spherical triangle
        assert validate_sides(1, HALF_PI, HALF_PI, 2.9).ok

    def test_reason_lists_every_failure(self):
        v = validate_sides(0, -1, 5, 1)
        assert "positivity" in v.reason and "triangle_inequality" in v.reason
