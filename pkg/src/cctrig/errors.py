"""Exception types raised by the trigonometry kernels, solvers and harness."""


class TrigError(ValueError):
    """Base class for all domain errors in this package."""


class DegenerateDenominator(TrigError):
    """1 + gcos(K, r) vanishes, so the unified coefficient is undefined."""


class SingularSystem(TrigError):
    """The 3x3 cosine system has (numerically) zero determinant."""


class InvalidTriangle(TrigError):
    """Side/angle data cannot describe a triangle in the requested geometry."""


class SphericalDomain(TrigError):
    """A cosine value fell outside [-1, 1] on the sphere beyond roundoff."""


class GeometryMismatch(TrigError):
    """Points from different model surfaces were combined."""


class ChartDomainError(TrigError):
    """Polar coordinates outside the injective chart of the surface."""


class ZeroTangent(TrigError):
    """A geodesic direction is undefined (coincident or antipodal points)."""


class GenerationExhausted(RuntimeError):
    """The random triangle generator hit its rejection cap."""
