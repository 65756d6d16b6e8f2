"""Eight-centered oval approximation of an ellipse and its perimeter."""

from .ellipse_ref import (
    EccentricityData,
    PerimeterReport,
    compare,
    eccentricity,
    elliptic_perimeter,
    kepler_perimeter,
)
from .errors import (
    DegenerateGeometry,
    GridTooLarge,
    InvalidAxes,
    InvalidRange,
    NonConvergence,
    OvalError,
)
from .oval import (
    Arc,
    EllipseSpec,
    OvalConstruction,
    OvalPath,
    TriangleDiagnostics,
    angles_geometric,
    central_angles,
    construct,
    full_oval,
    normalize_axes,
    oval_perimeter,
)

__version__ = "0.1.0"
