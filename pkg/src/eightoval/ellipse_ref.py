"""Reference perimeters of the true ellipse."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidAxes, NonConvergence
from .oval import EllipseSpec, oval_perimeter

DEFAULT_TOL = 1e-12
MAX_AGM_ITERATIONS = 64


@dataclass(frozen=True)
class EccentricityData:
    c: float
    epsilon: float


def eccentricity(spec: EllipseSpec) -> EccentricityData:
    a, b = spec.a, spec.b
    c = math.sqrt((a - b) * (a + b))
    return EccentricityData(c=c, epsilon=c / a)


def elliptic_perimeter(spec: EllipseSpec, tol: float = DEFAULT_TOL) -> float:
    """Perimeter ``4 a E(eps)`` by the arithmetic-geometric mean.

    Uses ``E = K * (1 - sum 2**(n-1) c_n**2)`` with ``K = pi / (2 M)``, written
    directly in terms of the semi-axes so no eccentricity is formed:

        L = 2 pi / M(a, b) * (a**2 - sum_n 2**(n-1) c_n**2),  c_0**2 = a**2 - b**2

    Iteration stops once the half-difference ``c_n`` drops below ``tol * a``.
    """
    if not (0.0 < tol <= 1e-6):
        raise ValueError(f"tol must lie in (0, 1e-6], got {tol!r}")
    an, bn = spec.a, spec.b
    threshold = tol * spec.a
    correction = 0.5 * (an - bn) * (an + bn)
    weight = 0.5
    for _ in range(MAX_AGM_ITERATIONS):
        cn = 0.5 * (an - bn)
        if abs(cn) <= threshold:
            return 4.0 * math.pi / (an + bn) * (spec.a * spec.a - correction)
        an, bn = 0.5 * (an + bn), math.sqrt(an * bn)
        weight *= 2.0
        correction += weight * cn * cn
    raise NonConvergence(f"AGM did not converge in {MAX_AGM_ITERATIONS} iterations")


def kepler_perimeter(spec: EllipseSpec) -> float:
    return math.pi * (spec.a + spec.b)


@dataclass(frozen=True)
class PerimeterReport:
    spec: EllipseSpec
    oval: float
    elliptic: float
    kepler: float
    rel_err_oval: float
    rel_err_kepler: float

    def as_dict(self) -> dict:
        return {
            "a": self.spec.a,
            "b": self.spec.b,
            "oval": self.oval,
            "elliptic": self.elliptic,
            "kepler": self.kepler,
            "rel_err_oval": self.rel_err_oval,
            "rel_err_kepler": self.rel_err_kepler,
            "unit": "fraction",
        }


def compare(spec: EllipseSpec, tol: float = DEFAULT_TOL) -> PerimeterReport:
    if not isinstance(spec, EllipseSpec):
        raise InvalidAxes(f"expected an EllipseSpec, got {type(spec).__name__}")
    oval = oval_perimeter(spec)
    elliptic = elliptic_perimeter(spec, tol)
    kepler = kepler_perimeter(spec)
    return PerimeterReport(
        spec=spec,
        oval=oval,
        elliptic=elliptic,
        kepler=kepler,
        rel_err_oval=abs(oval - elliptic) / elliptic,
        rel_err_kepler=abs(kepler - elliptic) / elliptic,
    )
