"""Generalized sine and cosine for constant sectional curvature ``K``.

    gsin_K(d) = sum_i (-K)^i d^(2i+1) / (2i+1)!
    gcos_K(d) = sum_i (-K)^i d^(2i)   / (2i)!

For ``K = 0, 1, -1`` these are ``(d, 1)``, ``(sin, cos)`` and ``(sinh, cosh)``.
Small ``|K| d^2`` is summed as a Horner series, which avoids the
``sin(x)/x``-type cancellation of the closed form near ``K = 0``; everything
else goes through ``sin(d sqrt K)/sqrt K`` and friends.  Large hyperbolic
arguments overflow to ``inf`` following IEEE semantics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "Curvature",
    "classify",
    "gsin",
    "gcos",
    "gsincos",
    "gtrig_series",
    "SERIES_THRESHOLD",
]

#: below this value of |K| d^2 the Taylor series is used
SERIES_THRESHOLD = 0.5
# remainder of the 12-term series is < 1e-22 relative for |K| d^2 < 0.5
_SERIES_TERMS = 12

_SIN_COEFFS = tuple(1.0 / math.factorial(2 * i + 1) for i in range(_SERIES_TERMS))
_COS_COEFFS = tuple(1.0 / math.factorial(2 * i) for i in range(_SERIES_TERMS))


@dataclass(frozen=True)
class Curvature:
    """Sectional curvature of a model surface (units 1/length^2)."""

    value: float

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError(f"curvature must be finite, got {self.value!r}")

    @property
    def kind(self) -> str:
        return classify(self.value)

    def __float__(self):
        return float(self.value)


def classify(K: float) -> str:
    """Return ``"flat"``, ``"spherical"`` or ``"hyperbolic"`` for curvature ``K``."""
    K = float(K)
    if not math.isfinite(K):
        raise ValueError(f"curvature must be finite, got {K!r}")
    if K == 0.0:
        return "flat"
    return "spherical" if K > 0 else "hyperbolic"


def _horner(coeffs, x):
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _gsincos_nonneg(K, d):
    # d >= 0 here; parity is applied by the callers so it holds bit-exactly
    if K == 0.0:
        return d, 1.0
    kd2 = K * d * d
    if abs(kd2) < SERIES_THRESHOLD:
        x = -kd2
        return d * _horner(_SIN_COEFFS, x), _horner(_COS_COEFFS, x)
    if K > 0:
        s = math.sqrt(K)
        t = d * s
        return math.sin(t) / s, math.cos(t)
    s = math.sqrt(-K)
    t = d * s
    try:
        return math.sinh(t) / s, math.cosh(t)
    except OverflowError:
        return math.inf, math.inf


def gsincos(K: float, d: float) -> tuple[float, float]:
    """Return ``(gsin_K(d), gcos_K(d))`` in one evaluation."""
    K = float(K)
    d = float(d)
    s, c = _gsincos_nonneg(K, abs(d))
    return (-s if math.copysign(1.0, d) < 0 else s), c


def gsin(K: float, d: float) -> float:
    """Generalized sine; odd in ``d``."""
    return gsincos(K, d)[0]


def gcos(K: float, d: float) -> float:
    """Generalized cosine; even in ``d``."""
    return gsincos(K, d)[1]


def gtrig_series(K: float, d: float, terms: int) -> tuple[float, float]:
    """Partial sums of both defining series with exactly ``terms`` terms.

    Summed term by term in ascending order, independently of the Horner
    evaluation used by :func:`gsin`/:func:`gcos`, so it can serve as a
    reference for them.
    """
    if terms < 1:
        raise ValueError("terms must be >= 1")
    K = float(K)
    d = float(d)
    s_sum = 0.0
    c_sum = 0.0
    s_term = d
    c_term = 1.0
    x = -K * d * d
    for i in range(terms):
        s_sum += s_term
        c_sum += c_term
        s_term *= x / ((2 * i + 2) * (2 * i + 3))
        c_term *= x / ((2 * i + 1) * (2 * i + 2))
    return s_sum, c_sum
