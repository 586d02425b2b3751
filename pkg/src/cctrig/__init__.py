"""Trigonometry on surfaces of constant curvature.

The generalized sine/cosine ``gsin_K``/``gcos_K`` put the Euclidean,
spherical and hyperbolic laws of cosines (and Pythagoras) into one
Euclidean-looking form.  Submodules:

``gtrig``    generalized sine and cosine
``surface``  plane, sphere and hyperboloid models in R^3
``laws``     unified and classical laws, angles from sides
``solver``   SAS / SSS solvers
``harness``  seeded coordinate-based verification
``report``   JSON / CSV output
``cli``      command line
"""

from .errors import (
    ChartDomainError,
    DegenerateDenominator,
    GenerationExhausted,
    GeometryMismatch,
    InvalidTriangle,
    SingularSystem,
    SphericalDomain,
    TrigError,
    ZeroTangent,
)
from .gtrig import Curvature, classify, gcos, gsin, gsincos, gtrig_series
from .harness import GeneratorConfig, ResidualReport, generate_triangle, run_verification
from .laws import (
    LabeledTriangle,
    TriangleAngles,
    TriangleSides,
    angles_from_sides,
    classical_cos_side,
    coefficient,
    first_law_residual,
    unified_law_residuals,
    unified_pythagoras_residual,
    x_coordinate_identity_residuals,
)
from .report import emit_report
from .solver import SolveResult, solve_sas, solve_sss, validate_sides
from .surface import (
    PolarCoordinate,
    SurfacePoint,
    distance,
    parallel_translate,
    polar_to_cartesian,
    tangent_angle_at,
)

__version__ = "0.1.0"
