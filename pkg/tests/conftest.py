import math
import random

import pytest

from cctrig.harness import construct_triangle
from cctrig.laws import side_violations

# arccosh(cosh(1)^2), evaluated with mpmath at 40 digits
HYP_RIGHT_HYPOTENUSE = 1.5133740065965040


def random_triangles(geometry, n, seed, side_max=None):
    """Coordinate-built triangles (sides a, b and angle C drawn uniformly)."""
    rng = random.Random(seed)
    hi = side_max or (math.pi - 0.01 if geometry == 1 else 5.0)
    out = []
    while len(out) < n:
        t = construct_triangle(geometry, rng.uniform(0.01, hi), rng.uniform(0.01, hi), rng.uniform(0.01, math.pi - 0.01))
        s = t.sides
        if not side_violations(geometry, s.a, s.b, s.c) and t.angles.violation(geometry) is None:
            out.append(t)
    return out


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    def log(criterion, ok, detail):
        line = f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return log


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
