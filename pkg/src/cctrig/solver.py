"""SAS and SSS triangle solvers with built-in identity verification."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .errors import InvalidTriangle, SphericalDomain
from .laws import (
    LabeledTriangle,
    TriangleAngles,
    TriangleSides,
    angles_from_sides,
    classical_cos_side,
    first_law_residual,
    side_violations,
    unified_law_residuals,
    x_coordinate_identity_residuals,
)

__all__ = [
    "DEFAULT_TOLERANCE",
    "Mode",
    "SolveRequest",
    "SolveResult",
    "Verdict",
    "identity_residual_summary",
    "solve",
    "solve_sas",
    "solve_sss",
    "validate_sides",
]

DEFAULT_TOLERANCE = 1e-9


class Mode(str, Enum):
    SAS = "sas"
    SSS = "sss"


@dataclass(frozen=True)
class SolveRequest:
    curvature: float
    mode: Mode
    given: dict = field(default_factory=dict)


@dataclass(frozen=True)
class SolveResult:
    triangle: LabeledTriangle
    residual_summary: float
    tolerance: float = DEFAULT_TOLERANCE

    @property
    def ok(self) -> bool:
        return self.residual_summary <= self.tolerance


@dataclass(frozen=True)
class Verdict:
    ok: bool
    failures: tuple[tuple[str, str], ...] = ()

    @property
    def reason(self) -> Optional[str]:
        if self.ok:
            return None
        return "; ".join(f"{code}: {msg}" for code, msg in self.failures)


def validate_sides(K: float, a: float, b: float, c: float) -> Verdict:
    failures = tuple(side_violations(K, a, b, c))
    return Verdict(not failures, failures)


def identity_residual_summary(t: LabeledTriangle) -> float:
    """Max residual over the unified laws, first laws and x-coordinate identities.

    The last two are evaluated in all three cyclic labelings.
    """
    worst = max(unified_law_residuals(t))
    for _ in range(3):
        worst = max(worst, first_law_residual(t.curvature, t.sides, t.angles))
        worst = max(worst, *x_coordinate_identity_residuals(t.curvature, t.sides, t.angles))
        t = t.rotated()
    return worst


def solve_sas(K: float, b: float, c: float, A: float, tolerance: float = DEFAULT_TOLERANCE) -> SolveResult:
    """Side ``a`` by the classical law of cosines, angles ``B``, ``C`` from the linear system."""
    K = float(K)
    if K > 0 and (b >= math.pi / math.sqrt(K) or c >= math.pi / math.sqrt(K)):
        raise SphericalDomain("spherical sides must be < pi/sqrt(K)")
    a = classical_cos_side(K, b, c, A)
    sides = TriangleSides.checked(K, a, b, c)
    solved = angles_from_sides(K, sides)
    tri = LabeledTriangle(K, sides, TriangleAngles(float(A), solved.B, solved.C))
    return SolveResult(tri, identity_residual_summary(tri), tolerance)


def solve_sss(K: float, a: float, b: float, c: float, tolerance: float = DEFAULT_TOLERANCE) -> SolveResult:
    K = float(K)
    sides = TriangleSides.checked(K, a, b, c)
    angles = angles_from_sides(K, sides)
    tri = LabeledTriangle(K, sides, angles)
    return SolveResult(tri, identity_residual_summary(tri), tolerance)


def solve(request: SolveRequest, tolerance: float = DEFAULT_TOLERANCE) -> SolveResult:
    g = request.given
    mode = Mode(request.mode)
    try:
        if mode is Mode.SAS:
            return solve_sas(request.curvature, g["b"], g["c"], g["A"], tolerance)
        return solve_sss(request.curvature, g["a"], g["b"], g["c"], tolerance)
    except KeyError as exc:
        raise InvalidTriangle(f"missing given value {exc.args[0]!r} for {mode.value}") from None
