"""Seeded triangle generation from coordinates and bulk identity verification.

Each trial places ``C`` at the origin, ``B`` at polar ``(a, pi)`` and ``A``
at polar ``(b, pi - C)``, then reads ``c``, ``A`` and ``B`` off the vertex
coordinates.  Nothing here calls the laws being checked to build a triangle.

Random draws come from :func:`cctrig.rng.uniform` with counter
``trial_index * TRIAL_STRIDE + slot``:

* slots ``[0, 3000)``: main triangle, attempt ``k`` uses ``3k, 3k+1, 3k+2``
  for ``a, b, C``
* slots ``[3000, 5000)``: right-angle triangle, attempt ``k`` uses
  ``3000 + 2k, 3001 + 2k`` for ``a, b``
* slot ``5000``: translation distance of the isometry spot check
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Optional

from .errors import GenerationExhausted, ZeroTangent
from .gtrig import classify
from .laws import (
    LabeledTriangle,
    TriangleAngles,
    TriangleSides,
    first_law_residual,
    law_of_sines_ratios,
    side_violations,
    unified_law_residuals,
    unified_pythagoras_residual,
    x_coordinate_identity_residuals,
)
from .rng import uniform_in
from .surface import (
    SurfacePoint,
    distance,
    origin,
    parallel_translate,
    polar_to_cartesian,
    tangent_angle_at,
)

__all__ = [
    "GeneratorConfig",
    "IdentityRecord",
    "ResidualReport",
    "IDENTITY_NAMES",
    "construct_triangle",
    "generate_triangle",
    "generate_right_triangle",
    "run_verification",
]

TRIAL_STRIDE = 8192
MAX_ATTEMPTS = 1000
_RIGHT_SLOT = 3000
_ISOMETRY_SLOT = 5000
ISOMETRY_RANGE = (-3.0, 3.0)
DEFAULT_ANGLE_RANGE = (0.01, math.pi - 0.01)

IDENTITY_NAMES = (
    "unified_law_of_cosines",
    "first_law_of_cosines",
    "x_coordinate_identities",
    "isometry",
    "unified_pythagoras",
)
LAW_OF_SINES = "law_of_sines"


def default_side_range(geometry: int) -> tuple[float, float]:
    if geometry > 0:
        return (0.01, math.pi - 0.01)
    return (0.01, 5.0)


@dataclass(frozen=True)
class GeneratorConfig:
    curvature: float = 1
    seed: int = 0
    trials: int = 1000
    side_range: Optional[tuple[float, float]] = None
    angle_range: tuple[float, float] = DEFAULT_ANGLE_RANGE
    first_trial: int = 0

    def __post_init__(self):
        if not math.isfinite(self.curvature):
            raise ValueError("curvature must be finite")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not (0 <= self.seed < 2**64):
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.side_range is None:
            object.__setattr__(self, "side_range", default_side_range(self.geometry))
        lo, hi = self.side_range
        if not 0 < lo <= hi:
            raise ValueError(f"bad side_range {self.side_range!r}")
        if self.geometry == 1 and hi >= math.pi:
            raise ValueError("spherical side_range must stay below pi")
        lo, hi = self.angle_range
        if not 0 < lo <= hi < math.pi:
            raise ValueError(f"bad angle_range {self.angle_range!r}")

    @property
    def geometry(self) -> int:
        """Unit model surface used for the coordinate construction."""
        return 0 if self.curvature == 0 else (1 if self.curvature > 0 else -1)

    @property
    def scale(self) -> float:
        """Factor mapping unit-surface lengths to lengths at ``curvature``."""
        return 1.0 if self.curvature == 0 else 1.0 / math.sqrt(abs(self.curvature))


def construct_triangle(geometry: int, a: float, b: float, C: float) -> LabeledTriangle:
    """Triangle with sides ``a = |BC|``, ``b = |CA|`` and angle ``C`` at the origin."""
    pc = origin(geometry)
    pb = polar_to_cartesian(geometry, (a, 0.0))
    # polar angle pi exactly; cos/sin(pi) in floating point would leave y != 0
    pb = SurfacePoint(-pb.x, 0.0, pb.z, geometry)
    pa = polar_to_cartesian(geometry, (b, math.pi - C))
    sides = TriangleSides(a, b, distance(pa, pb))
    angles = TriangleAngles(tangent_angle_at(pa, pb, pc), tangent_angle_at(pb, pc, pa), C)
    return LabeledTriangle(geometry, sides, angles, (pa, pb, pc))


def _try_construct(g, a, b, C):
    try:
        return construct_triangle(g, a, b, C)
    except ZeroTangent:
        return None


def _acceptable(t: LabeledTriangle) -> bool:
    s = t.sides
    if side_violations(t.curvature, s.a, s.b, s.c):
        return False
    return t.angles.violation(t.curvature) is None


def _counter(trial_index, slot):
    return trial_index * TRIAL_STRIDE + slot


def generate_triangle(cfg: GeneratorConfig, trial_index: int) -> LabeledTriangle:
    """Deterministic random triangle on the unit surface of ``cfg``'s sign."""
    g = cfg.geometry
    lo, hi = cfg.side_range
    alo, ahi = cfg.angle_range
    for k in range(MAX_ATTEMPTS):
        n = _counter(trial_index, 3 * k)
        a = uniform_in(cfg.seed, n, lo, hi)
        b = uniform_in(cfg.seed, n + 1, lo, hi)
        C = uniform_in(cfg.seed, n + 2, alo, ahi)
        t = _try_construct(g, a, b, C)
        if t is not None and _acceptable(t):
            return t
    raise GenerationExhausted(f"no valid triangle after {MAX_ATTEMPTS} draws (trial {trial_index})")


def generate_right_triangle(cfg: GeneratorConfig, trial_index: int) -> LabeledTriangle:
    """Random triangle with a right angle at ``A`` (built at ``C``, then relabeled)."""
    g = cfg.geometry
    lo, hi = cfg.side_range
    for k in range(MAX_ATTEMPTS):
        n = _counter(trial_index, _RIGHT_SLOT + 2 * k)
        a = uniform_in(cfg.seed, n, lo, hi)
        b = uniform_in(cfg.seed, n + 1, lo, hi)
        t = _try_construct(g, a, b, math.pi / 2)
        if t is not None and _acceptable(t):
            # (A, B, C) -> (B, C, A) twice puts the old C in position A
            return t.rotated().rotated()
    raise GenerationExhausted(f"no valid right triangle after {MAX_ATTEMPTS} draws (trial {trial_index})")


def _rescaled(t: LabeledTriangle, K: float, scale: float) -> LabeledTriangle:
    if scale == 1.0 and K == t.curvature:
        return t
    return LabeledTriangle(K, t.sides.scaled(scale), t.angles, None)


@dataclass
class IdentityRecord:
    name: str
    max_abs_residual: float = 0.0
    sum_abs_residual: float = 0.0
    count: int = 0
    worst_case_inputs: Optional[dict] = None

    @property
    def mean_abs_residual(self) -> float:
        return self.sum_abs_residual / self.count if self.count else 0.0

    def add(self, value: float, inputs: dict):
        self.count += 1
        self.sum_abs_residual += value
        current = self.max_abs_residual
        # a NaN residual becomes the worst case and stays there
        if self.worst_case_inputs is None or math.isnan(value) or (not math.isnan(current) and value > current):
            self.max_abs_residual = value
            self.worst_case_inputs = inputs

    def merged(self, other: "IdentityRecord") -> "IdentityRecord":
        if other.name != self.name:
            raise ValueError("cannot merge different identities")
        mine, theirs = self.max_abs_residual, other.max_abs_residual
        mine_wins = other.worst_case_inputs is None or (
            self.worst_case_inputs is not None
            and (math.isnan(mine) or (not math.isnan(theirs) and theirs <= mine))
        )
        best = self if mine_wins else other
        return IdentityRecord(
            self.name,
            best.max_abs_residual,
            self.sum_abs_residual + other.sum_abs_residual,
            self.count + other.count,
            best.worst_case_inputs,
        )


@dataclass
class ResidualReport:
    curvature: float
    seed: int
    trials: int
    tolerance: float
    identities: list = field(default_factory=list)
    first_trial: int = 0

    @property
    def geometry(self) -> str:
        return classify(self.curvature)

    @property
    def passed(self) -> bool:
        return all(r.max_abs_residual <= self.tolerance for r in self.identities)

    def record(self, name: str) -> IdentityRecord:
        for r in self.identities:
            if r.name == name:
                return r
        raise KeyError(name)

    def merged(self, other: "ResidualReport") -> "ResidualReport":
        """Combine reports over disjoint trial ranges of the same run."""
        if (self.curvature, self.seed, self.tolerance) != (other.curvature, other.seed, other.tolerance):
            raise ValueError("reports differ in curvature, seed or tolerance")
        if [r.name for r in self.identities] != [r.name for r in other.identities]:
            raise ValueError("reports track different identities")
        return ResidualReport(
            self.curvature,
            self.seed,
            self.trials + other.trials,
            self.tolerance,
            [a.merged(b) for a, b in zip(self.identities, other.identities)],
            min(self.first_trial, other.first_trial),
        )


def _inputs(trial, t, **extra):
    d = {"trial": trial}
    d.update(zip(("a", "b", "c"), t.sides.as_tuple()))
    d.update(zip(("A", "B", "C"), t.angles.as_tuple()))
    d.update(extra)
    return d


def _isometry_defect(vertices, d):
    moved = [parallel_translate(p, d) for p in vertices]
    worst = 0.0
    for i, j in ((0, 1), (1, 2), (2, 0)):
        worst = max(worst, abs(distance(vertices[i], vertices[j]) - distance(moved[i], moved[j])))
    return worst


def _sines_spread(t):
    r = law_of_sines_ratios(t.curvature, t.sides, t.angles)
    return (max(r) - min(r)) / max(abs(x) for x in r)


def run_verification(
    cfg: GeneratorConfig, tolerance: float, include_law_of_sines: bool = False
) -> ResidualReport:
    """Generate ``cfg.trials`` triangles and aggregate every identity residual.

    For curvature outside {-1, 0, 1} triangles are built on the unit surface
    of the same sign and rescaled; the isometry check needs the embedding
    and is skipped there.
    """
    if not tolerance > 0:
        raise ValueError("tolerance must be > 0")
    K = float(cfg.curvature)
    embedded = K in (-1.0, 0.0, 1.0)
    names = [n for n in IDENTITY_NAMES if embedded or n != "isometry"]
    if include_law_of_sines:
        names.append(LAW_OF_SINES)
    records = {n: IdentityRecord(n) for n in names}

    for trial in range(cfg.first_trial, cfg.first_trial + cfg.trials):
        unit = generate_triangle(cfg, trial)
        t = _rescaled(unit, K, cfg.scale)
        inputs = _inputs(trial, t)

        records["unified_law_of_cosines"].add(max(unified_law_residuals(t)), inputs)
        first = 0.0
        xcoord = 0.0
        r = t
        for _ in range(3):
            first = max(first, first_law_residual(K, r.sides, r.angles))
            xcoord = max(xcoord, *x_coordinate_identity_residuals(K, r.sides, r.angles))
            r = r.rotated()
        records["first_law_of_cosines"].add(first, inputs)
        records["x_coordinate_identities"].add(xcoord, inputs)

        if embedded:
            d = uniform_in(cfg.seed, _counter(trial, _ISOMETRY_SLOT), *ISOMETRY_RANGE)
            records["isometry"].add(_isometry_defect(unit.vertices, d), dict(inputs, d=d))

        right = _rescaled(generate_right_triangle(cfg, trial), K, cfg.scale)
        records["unified_pythagoras"].add(
            unified_pythagoras_residual(K, right.sides), _inputs(trial, right)
        )
        if include_law_of_sines:
            records[LAW_OF_SINES].add(_sines_spread(t), inputs)

    return ResidualReport(K, cfg.seed, cfg.trials, tolerance, list(records.values()), cfg.first_trial)
