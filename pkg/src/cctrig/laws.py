"""Trigonometric laws for triangles of constant curvature ``K``.

Side ``a`` is opposite vertex ``A`` (and so on).  The unified coefficient

    coefficient(K, p, q, r) = (gcos p + gcos q) / (1 + gcos r)

weights ``gsin(r)^2``, which turns the curved laws of cosines into the
Euclidean shape

    k_a gsin(a)^2 = k_b gsin(b)^2 + k_c gsin(c)^2 - 2 gsin(b) gsin(c) cos A

with ``k_a = coefficient(K, b, c, a)``, ``k_b = coefficient(K, c, a, b)``,
``k_c = coefficient(K, a, b, c)``.  All coefficients equal 1 at ``K = 0``.

Residuals are absolute ``|LHS - RHS|``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import DegenerateDenominator, InvalidTriangle, SingularSystem, SphericalDomain
from .gtrig import gcos, gsin, gsincos
from .surface import SurfacePoint, distance, tangent_angle_at

__all__ = [
    "TriangleSides",
    "TriangleAngles",
    "LabeledTriangle",
    "side_violations",
    "coefficient",
    "unified_coefficients",
    "unified_law_residuals",
    "unified_pythagoras_residual",
    "first_law_residual",
    "x_coordinate_identity_residuals",
    "law_of_sines_ratios",
    "classical_cos_side",
    "solve_cosines",
    "angles_from_sides",
    "DENOMINATOR_EPS",
    "DETERMINANT_EPS",
    "CLAMP_TOL",
]

DENOMINATOR_EPS = 1e-14
DETERMINANT_EPS = 1e-14
#: cosines beyond [-1, 1] by less than this are roundoff and get clamped
CLAMP_TOL = 1e-9


@dataclass(frozen=True)
class TriangleSides:
    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise InvalidTriangle(f"side {name} must be finite, got {v!r}")

    @classmethod
    def checked(cls, K: float, a: float, b: float, c: float) -> "TriangleSides":
        """Build sides and enforce the triangle invariants for curvature ``K``."""
        failures = side_violations(K, a, b, c)
        if failures:
            code, message = failures[0]
            raise InvalidTriangle(f"{code}: {message}")
        return cls(float(a), float(b), float(c))

    def as_tuple(self):
        return (self.a, self.b, self.c)

    def rotated(self) -> "TriangleSides":
        """Relabel ``(a, b, c) -> (b, c, a)``."""
        return TriangleSides(self.b, self.c, self.a)

    def scaled(self, factor: float) -> "TriangleSides":
        return TriangleSides(self.a * factor, self.b * factor, self.c * factor)


@dataclass(frozen=True)
class TriangleAngles:
    A: float
    B: float
    C: float

    def as_tuple(self):
        return (self.A, self.B, self.C)

    def rotated(self) -> "TriangleAngles":
        return TriangleAngles(self.B, self.C, self.A)

    def violation(self, K: float, tol: float = 1e-9) -> Optional[str]:
        """Reason the angles cannot belong to a curvature-``K`` triangle, or None."""
        for name, v in zip("ABC", self.as_tuple()):
            if not (0.0 < v < math.pi):
                return f"angle {name}={v!r} not in (0, pi)"
        excess = self.A + self.B + self.C - math.pi
        if K == 0 and abs(excess) > tol:
            return f"Euclidean angle sum differs from pi by {excess:.3g}"
        if K > 0 and excess <= 0:
            return "spherical angle sum must exceed pi"
        if K < 0 and excess >= 0:
            return "hyperbolic angle sum must be below pi"
        return None


@dataclass(frozen=True)
class LabeledTriangle:
    curvature: float
    sides: TriangleSides
    angles: TriangleAngles
    vertices: Optional[tuple[SurfacePoint, SurfacePoint, SurfacePoint]] = None

    def rotated(self) -> "LabeledTriangle":
        """Cyclic relabeling ``A -> C, B -> A, C -> B`` of vertices, sides and angles."""
        verts = None
        if self.vertices is not None:
            pa, pb, pc = self.vertices
            verts = (pb, pc, pa)
        return LabeledTriangle(self.curvature, self.sides.rotated(), self.angles.rotated(), verts)

    def coordinate_defect(self) -> float:
        """Largest disagreement between stored sides/angles and the vertex coordinates."""
        if self.vertices is None:
            raise ValueError("triangle carries no vertex coordinates")
        pa, pb, pc = self.vertices
        measured = (
            distance(pb, pc),
            distance(pc, pa),
            distance(pa, pb),
            tangent_angle_at(pa, pb, pc),
            tangent_angle_at(pb, pc, pa),
            tangent_angle_at(pc, pa, pb),
        )
        stored = self.sides.as_tuple() + self.angles.as_tuple()
        return max(abs(m - s) for m, s in zip(measured, stored))


def side_violations(K: float, a: float, b: float, c: float) -> list[tuple[str, str]]:
    """Every failed side invariant for curvature ``K`` as ``(code, message)`` pairs."""
    K = float(K)
    sides = (a, b, c)
    if not all(math.isfinite(s) for s in sides):
        return [("finite", "sides must be finite")]
    out = []
    if min(sides) <= 0:
        out.append(("positivity", "every side must be > 0"))
    if a >= b + c or b >= c + a or c >= a + b:
        out.append(("triangle_inequality", "each side must be < the sum of the other two"))
    if K > 0:
        half_turn = math.pi / math.sqrt(K)
        if max(sides) >= half_turn:
            out.append(("spherical_side_bound", "each side must be < pi/sqrt(K)"))
        if a + b + c >= 2 * half_turn:
            out.append(("spherical_perimeter_bound", "a + b + c must be < 2 pi/sqrt(K)"))
    return out


def _coeff_from_gcos(gp, gq, gr):
    denom = 1.0 + gr
    if abs(denom) <= DENOMINATOR_EPS:
        raise DegenerateDenominator(f"1 + gcos(r) = {denom!r} vanishes")
    return (gp + gq) / denom


def coefficient(K: float, p: float, q: float, r: float) -> float:
    """``(gcos p + gcos q) / (1 + gcos r)``, the weight of ``gsin(r)^2``."""
    return _coeff_from_gcos(gcos(K, p), gcos(K, q), gcos(K, r))


def _unit_values(K, sides):
    sa, ca = gsincos(K, sides.a)
    sb, cb = gsincos(K, sides.b)
    sc, cc = gsincos(K, sides.c)
    return (sa, sb, sc), (ca, cb, cc)


def unified_coefficients(K: float, sides: TriangleSides) -> tuple[float, float, float]:
    """``(k_a, k_b, k_c)``: the coefficients of ``gsin(a)^2``, ``gsin(b)^2``, ``gsin(c)^2``."""
    _, (ca, cb, cc) = _unit_values(float(K), sides)
    return (
        _coeff_from_gcos(cb, cc, ca),
        _coeff_from_gcos(cc, ca, cb),
        _coeff_from_gcos(ca, cb, cc),
    )


def _cosine_law_residual(s_opp, s1, s2, k_opp, k1, k2, cos_angle):
    lhs = k_opp * s_opp * s_opp
    rhs = k1 * s1 * s1 + k2 * s2 * s2 - 2.0 * s1 * s2 * cos_angle
    return abs(lhs - rhs)


def _law_residuals(K, sides, angles):
    K = float(K)
    sa, sb, sc = _unit_values(K, sides)[0]
    ka, kb, kc = unified_coefficients(K, sides)
    return (
        _cosine_law_residual(sa, sb, sc, ka, kb, kc, math.cos(angles.A)),
        _cosine_law_residual(sb, sc, sa, kb, kc, ka, math.cos(angles.B)),
        _cosine_law_residual(sc, sa, sb, kc, ka, kb, math.cos(angles.C)),
    )


def unified_law_residuals(t: LabeledTriangle) -> tuple[float, float, float]:
    """Residuals of the three cyclic unified laws of cosines (for A, B, C)."""
    return _law_residuals(t.curvature, t.sides, t.angles)


def unified_pythagoras_residual(K: float, s: TriangleSides) -> float:
    """``|k_a gsin(a)^2 - k_b gsin(b)^2 - k_c gsin(c)^2|`` for a right angle at A."""
    sa, sb, sc = _unit_values(float(K), s)[0]
    ka, kb, kc = unified_coefficients(K, s)
    return abs(ka * sa * sa - (kb * sb * sb + kc * sc * sc))


def first_law_residual(K: float, s: TriangleSides, ang: TriangleAngles) -> float:
    """``|k_a gsin(a) - gsin(c) cos B - gsin(b) cos C|``."""
    sa, sb, sc = _unit_values(float(K), s)[0]
    ka = unified_coefficients(K, s)[0]
    return abs(ka * sa - (sc * math.cos(ang.B) + sb * math.cos(ang.C)))


def x_coordinate_identity_residuals(
    K: float, s: TriangleSides, ang: TriangleAngles
) -> tuple[float, float]:
    """Residuals of the two x-coordinate identities for the translated vertex.

    Forward:  ``gcos b gsin a - gsin b gcos a cos C = gsin c cos B``
    Inverse:  ``-gcos c gsin a + gsin c gcos a cos B = -gsin b cos C``
    """
    (sa, sb, sc), (ca, cb, cc) = _unit_values(float(K), s)
    cosB = math.cos(ang.B)
    cosC = math.cos(ang.C)
    forward = cb * sa - sb * ca * cosC - sc * cosB
    inverse = -cc * sa + sc * ca * cosB + sb * cosC
    return abs(forward), abs(inverse)


def law_of_sines_ratios(K: float, s: TriangleSides, ang: TriangleAngles) -> tuple[float, float, float]:
    """``gsin(side) / sin(opposite angle)`` for the three sides."""
    K = float(K)
    return (
        gsin(K, s.a) / math.sin(ang.A),
        gsin(K, s.b) / math.sin(ang.B),
        gsin(K, s.c) / math.sin(ang.C),
    )


def _clamp_unit(x, what):
    if x > 1.0 + CLAMP_TOL or x < -1.0 - CLAMP_TOL:
        raise InvalidTriangle(f"{what} = {x!r} outside [-1, 1]")
    return min(1.0, max(-1.0, x))


def _half_versine(A):
    # (1 - cos A) / 2 without cancellation at either end of (0, pi)
    c = math.cos(A)
    if c <= 0.5:
        return 0.5 * (1.0 - c)
    return math.sin(0.5 * A) ** 2


def _half_coversine(A):
    # (1 + cos A) / 2
    c = math.cos(A)
    if c >= -0.5:
        return 0.5 * (1.0 + c)
    return math.cos(0.5 * A) ** 2


def classical_cos_side(K: float, b: float, c: float, A: float) -> float:
    """Side ``a`` opposite angle ``A`` from the classical law of cosines.

    ``a^2 = b^2 + c^2 - 2 b c cos A`` at ``K = 0`` and
    ``gcos a = gcos b gcos c + K gsin b gsin c cos A`` otherwise.  The value
    is recovered through the equivalent half-side form

        gsin(a/2)^2 = gsin((b-c)/2)^2 + gsin b gsin c sin(A/2)^2
        gcos(a/2)^2 = gcos((b+c)/2)^2 + K gsin b gsin c cos(A/2)^2

    which stays accurate for short sides where ``arccos`` near 1 does not.
    """
    K = float(K)
    if not (b > 0 and c > 0):
        raise InvalidTriangle("sides b, c must be > 0")
    if not (0.0 < A < math.pi):
        raise InvalidTriangle(f"angle A={A!r} not in (0, pi)")
    sb, cb = gsincos(K, b)
    sc, cc = gsincos(K, c)
    if K > 0:
        half_turn = math.pi / math.sqrt(K)
        if b >= half_turn or c >= half_turn:
            raise SphericalDomain("spherical sides must be < pi/sqrt(K)")
        cos_a = cb * cc + K * sb * sc * math.cos(A)
        if abs(cos_a) > 1.0 + CLAMP_TOL:
            raise SphericalDomain(f"gcos(a) = {cos_a!r} outside [-1, 1]")
    half_sin2 = gsin(K, 0.5 * (b - c)) ** 2 + sb * sc * _half_versine(A)
    if K == 0:
        return 2.0 * math.sqrt(half_sin2)
    root = math.sqrt(abs(K))
    if K > 0:
        half_cos2 = gcos(K, 0.5 * (b + c)) ** 2 + K * sb * sc * _half_coversine(A)
        return 2.0 * math.atan2(root * math.sqrt(half_sin2), math.sqrt(max(half_cos2, 0.0))) / root
    return 2.0 * math.asinh(root * math.sqrt(half_sin2)) / root


def solve_cosines(K: float, s: TriangleSides) -> tuple[float, float, float]:
    """Solve the 3x3 linear system of first laws for ``(cos A, cos B, cos C)``.

    Rows ``(gsin b, gsin a, 0)``, ``(0, gsin c, gsin b)``, ``(gsin c, 0, gsin a)``
    against ``(k_c gsin c, k_a gsin a, k_b gsin b)``.  The determinant is
    ``2 gsin a gsin b gsin c``; the Cramer quotients are returned unclamped.
    """
    K = float(K)
    sa, sb, sc = _unit_values(K, s)[0]
    det = 2.0 * sa * sb * sc
    if not abs(det) > DETERMINANT_EPS:
        raise SingularSystem(f"determinant 2 gsin(a) gsin(b) gsin(c) = {det!r}")
    ka, kb, kc = unified_coefficients(K, s)
    qa, qb, qc = ka * sa * sa, kb * sb * sb, kc * sc * sc
    # Cramer numerators share the factor of the eliminated gsin
    cos_A = (qb + qc - qa) * sa / det
    cos_B = (qc + qa - qb) * sb / det
    cos_C = (qa + qb - qc) * sc / det
    return cos_A, cos_B, cos_C


def angles_from_sides(K: float, s: TriangleSides) -> TriangleAngles:
    """Interior angles of the triangle with sides ``s`` in curvature ``K``."""
    cosines = solve_cosines(K, s)
    A, B, C = (math.acos(_clamp_unit(x, f"cos {n}")) for x, n in zip(cosines, "ABC"))
    return TriangleAngles(A, B, C)
