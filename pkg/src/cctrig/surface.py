"""The three unit model surfaces embedded in R^3.

* ``geometry = 0``: the plane ``z = 1``
* ``geometry = 1``: the unit sphere ``x^2 + y^2 + z^2 = 1``
* ``geometry = -1``: the upper sheet ``x^2 + y^2 - z^2 = -1, z > 0``

All three share the origin ``(0, 0, 1)`` and the line ``y = 0``.  Distances
and tangent angles computed here are the coordinate ground truth that the
trigonometric laws are checked against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ChartDomainError, GeometryMismatch, ZeroTangent
from .gtrig import gsincos

__all__ = [
    "GEOMETRIES",
    "SurfacePoint",
    "PolarCoordinate",
    "origin",
    "polar_to_cartesian",
    "distance",
    "parallel_translate",
    "tangent_angle_at",
    "minkowski",
]

GEOMETRIES = (-1, 0, 1)

_ZERO_TANGENT = 1e-15


def _check_geometry(geometry):
    g = int(geometry)
    if g != geometry or g not in GEOMETRIES:
        raise ValueError(f"model surfaces exist for curvature -1, 0, 1 only, got {geometry!r}")
    return g


@dataclass(frozen=True)
class SurfacePoint:
    x: float
    y: float
    z: float
    geometry: int

    def __post_init__(self):
        _check_geometry(self.geometry)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)

    def surface_residual(self) -> float:
        """Absolute defect of the defining equation of the surface."""
        x, y, z = self.x, self.y, self.z
        if self.geometry == 0:
            return abs(z - 1.0)
        if self.geometry == 1:
            return abs(x * x + y * y + z * z - 1.0)
        return abs(x * x + y * y - z * z + 1.0)


@dataclass(frozen=True)
class PolarCoordinate:
    r: float
    theta: float

    def __post_init__(self):
        if not (math.isfinite(self.r) and math.isfinite(self.theta)):
            raise ChartDomainError("polar coordinates must be finite")
        if self.r < 0:
            raise ChartDomainError(f"polar radius must be nonnegative, got {self.r!r}")


def origin(geometry: int) -> SurfacePoint:
    return SurfacePoint(0.0, 0.0, 1.0, _check_geometry(geometry))


def minkowski(u, w) -> float:
    """Lorentzian form ``u1 w1 + u2 w2 - u3 w3`` on 3-tuples."""
    return u[0] * w[0] + u[1] * w[1] - u[2] * w[2]


def polar_to_cartesian(geometry: int, polar) -> SurfacePoint:
    """Map polar coordinates ``(r, theta)`` about the origin onto the surface.

    ``polar`` may be a :class:`PolarCoordinate` or an ``(r, theta)`` pair.
    On the sphere the chart is injective only for ``r < pi``.
    """
    g = _check_geometry(geometry)
    if not isinstance(polar, PolarCoordinate):
        polar = PolarCoordinate(*polar)
    if g == 1 and polar.r >= math.pi:
        raise ChartDomainError(f"spherical polar radius must be < pi, got {polar.r!r}")
    s, c = gsincos(g, polar.r)
    return SurfacePoint(s * math.cos(polar.theta), s * math.sin(polar.theta), c, g)


def _same_geometry(*points):
    g = points[0].geometry
    for p in points[1:]:
        if p.geometry != g:
            raise GeometryMismatch(f"cannot mix geometries {g} and {p.geometry}")
    return g


def _cross(u, w):
    return (
        u[1] * w[2] - u[2] * w[1],
        u[2] * w[0] - u[0] * w[2],
        u[0] * w[1] - u[1] * w[0],
    )


def _dot(u, w):
    return u[0] * w[0] + u[1] * w[1] + u[2] * w[2]


def distance(p: SurfacePoint, q: SurfacePoint) -> float:
    """Geodesic distance between two points of the same surface.

    Sphere: ``atan2(|p x q|, p.q)``; hyperboloid: ``2 asinh(|p - q|_M / 2)``.
    Both agree with ``arccos(p.q)`` and ``arccosh(-<p, q>_M)`` but stay
    accurate for nearby points and never leave the domain of the inverse.
    """
    g = _same_geometry(p, q)
    if g == 0:
        return math.hypot(q.x - p.x, q.y - p.y)
    pt, qt = p.as_tuple(), q.as_tuple()
    if g == 1:
        cr = _cross(pt, qt)
        return math.atan2(math.sqrt(_dot(cr, cr)), _dot(pt, qt))
    diff = (q.x - p.x, q.y - p.y, q.z - p.z)
    chord2 = max(minkowski(diff, diff), 0.0)
    return 2.0 * math.asinh(0.5 * math.sqrt(chord2))


def parallel_translate(p: SurfacePoint, d: float) -> SurfacePoint:
    """Isometry of the surface sliding along the line ``y = 0`` by signed ``d``.

    ``(x, y, z) -> (x gcos d + z gsin d, y, -K x gsin d + z gcos d)``: a
    translation of the plane, a rotation about the y-axis of the sphere, a
    boost of the hyperboloid.
    """
    K = p.geometry
    s, c = gsincos(K, d)
    if K == 0:
        return SurfacePoint(p.x + d, p.y, 1.0, 0)
    return SurfacePoint(p.x * c + p.z * s, p.y, -K * p.x * s + p.z * c, K)


def _tangent(v, q, g):
    """Projection of ``q`` onto the tangent plane at ``v``."""
    if g == 0:
        return (q[0] - v[0], q[1] - v[1], 0.0)
    if g == 1:
        k = _dot(v, q)
        return (q[0] - k * v[0], q[1] - k * v[1], q[2] - k * v[2])
    k = minkowski(v, q)
    return (q[0] + k * v[0], q[1] + k * v[1], q[2] + k * v[2])


def _boost_to_origin(v, q):
    # Lorentz isometry taking v to (0, 0, 1): rotate v into the xz-plane, then
    # translate along the x-axis by -dist(v, origin); returns the x, y of q's image
    rho = math.hypot(v[0], v[1])
    if rho == 0.0:
        return q[0], q[1]
    cphi, sphi = v[0] / rho, v[1] / rho
    xr = cphi * q[0] + sphi * q[1]
    yr = -sphi * q[0] + cphi * q[1]
    return xr * v[2] - q[2] * rho, yr


def tangent_angle_at(vertex: SurfacePoint, q1: SurfacePoint, q2: SurfacePoint) -> float:
    """Interior angle at ``vertex`` between the geodesics to ``q1`` and ``q2``.

    Plane and sphere use the projections of ``q1``, ``q2`` onto the tangent
    plane at ``vertex``; the angle is ``atan2`` of the triple product with the
    unit normal over the dot product, which keeps full accuracy near 0 and pi.
    On the hyperboloid the ambient projection loses roughly ``z^2`` digits far
    from the origin, so the vertex is first moved to the origin by an
    isometry, where the tangent plane is the Euclidean xy-plane.
    """
    g = _same_geometry(vertex, q1, q2)
    v = vertex.as_tuple()
    if g == -1:
        x1, y1 = _boost_to_origin(v, q1.as_tuple())
        x2, y2 = _boost_to_origin(v, q2.as_tuple())
        t1 = (x1, y1, 0.0)
        t2 = (x2, y2, 0.0)
        normal = (0.0, 0.0, 1.0)
    else:
        t1 = _tangent(v, q1.as_tuple(), g)
        t2 = _tangent(v, q2.as_tuple(), g)
        normal = (0.0, 0.0, 1.0) if g == 0 else v
    if math.sqrt(_dot(t1, t1)) <= _ZERO_TANGENT or math.sqrt(_dot(t2, t2)) <= _ZERO_TANGENT:
        raise ZeroTangent("geodesic direction undefined (coincident or antipodal points)")
    sin_part = abs(_dot(normal, _cross(t1, t2)))
    return math.atan2(sin_part, _dot(t1, t2))
