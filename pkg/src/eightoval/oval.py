"""Eight-centered oval built on the semi-axes of an ellipse.

A quarter of the oval is made of three circular arcs:

* the major arc, centered at ``g`` on the minor axis, radius ``R = a**2/b``,
  osculating the ellipse at ``(0, b)``;
* the intermediate arc, centered at ``k``, radius ``p = (a + b)/2``;
* the minor arc, centered at ``e`` on the major axis, radius ``r = b**2/a``,
  osculating the ellipse at ``(a, 0)``.

``k`` is one of the two intersections of the auxiliary circles
``circle(e, p - r)`` and ``circle(g, R - p)``. The three central angles
``gamma``, ``beta`` and ``delta`` have closed forms (see :func:`central_angles`);
:func:`angles_geometric` recovers them from coordinates alone and is used as
an independent check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateGeometry, InvalidAxes

Point = tuple[float, float]

HALF_PI = 0.5 * math.pi
_CLAMP_SLACK = 1e-12


@dataclass(frozen=True)
class EllipseSpec:
    """Semi-axes of the ellipse, canonical orientation ``a >= b > 0``."""

    a: float
    b: float

    def __post_init__(self) -> None:
        a, b = self.a, self.b
        if not (math.isfinite(a) and math.isfinite(b)):
            raise InvalidAxes(f"semi-axes must be finite, got a={a!r}, b={b!r}")
        if b <= 0:
            raise InvalidAxes(f"semi-minor axis must be positive, got b={b!r}")
        if a < b:
            raise InvalidAxes(f"semi-major axis must satisfy a >= b, got a={a!r} < b={b!r}")

    @property
    def is_circle(self) -> bool:
        return self.a == self.b


def normalize_axes(x: float, y: float) -> tuple[EllipseSpec, bool]:
    """Build a spec from unordered axes.

    Returns the spec and a flag telling whether the axes were swapped, i.e.
    whether the drawing has to be turned by a quarter turn to match the
    caller's orientation.
    """
    if not (math.isfinite(x) and math.isfinite(y)):
        raise InvalidAxes(f"semi-axes must be finite, got {x!r}, {y!r}")
    if x <= 0 or y <= 0:
        raise InvalidAxes(f"semi-axes must be positive, got {x!r}, {y!r}")
    if x >= y:
        return EllipseSpec(x, y), False
    return EllipseSpec(y, x), True


def _safe_asin(x: float, name: str) -> float:
    if x > 1.0 or x < -1.0:
        if abs(x) - 1.0 > _CLAMP_SLACK:
            raise DegenerateGeometry(f"sin({name}) = {x!r} is outside [-1, 1]")
        x = math.copysign(1.0, x)
    return math.asin(x)


# Closed-form trigonometric expressions. These take raw floats on purpose so
# the a <-> b symmetry of the formulas can be probed outside the canonical
# orientation.


def sin_gamma(a: float, b: float) -> float:
    s = math.sqrt(2.0 * a * b)
    return b / (2.0 * a + b) * (2.0 * a + b + s) / (a + b + s)


def sin_beta(a: float, b: float) -> float:
    return 2.0 * (a + b) * math.sqrt(2.0 * a * b) / ((a + 2.0 * b) * (2.0 * a + b))


def sin_delta(a: float, b: float) -> float:
    s = math.sqrt(2.0 * a * b)
    return a / (a + 2.0 * b) * (a + 2.0 * b + s) / (a + b + s)


def sin_alpha_prime(a: float, b: float) -> float:
    return b / (2.0 * a + b) * math.sqrt(2.0 * a * b / (a * a + b * b))


def cos_alpha_prime(a: float, b: float) -> float:
    return (2.0 * a * a + a * b + b * b) / ((b + 2.0 * a) * math.hypot(a, b))


def sin_alpha(a: float, b: float) -> float:
    return a / (a + 2.0 * b) * math.sqrt(2.0 * a * b / (a * a + b * b))


def cos_alpha(a: float, b: float) -> float:
    return (a * a + a * b + 2.0 * b * b) / ((a + 2.0 * b) * math.hypot(a, b))


def sin_theta(a: float, b: float) -> float:
    return b / math.hypot(a, b)


def ge_squared(a: float, b: float) -> float:
    """Squared distance between the two osculating centers."""
    return (a * a + b * b) * (a * a - b * b) ** 2 / (a * a * b * b)


def central_angles(spec: EllipseSpec) -> tuple[float, float, float]:
    """Central angles ``(gamma, beta, delta)`` of the major, intermediate and
    minor arcs, in radians. Their sum is ``pi/2``."""
    a, b = spec.a, spec.b
    return (
        _safe_asin(sin_gamma(a, b), "gamma"),
        _safe_asin(sin_beta(a, b), "beta"),
        _safe_asin(sin_delta(a, b), "delta"),
    )


def oval_perimeter(spec: EllipseSpec) -> float:
    """Perimeter of the eight-centered oval: the sum of its eight arc lengths."""
    a, b = spec.a, spec.b
    gamma, beta, delta = central_angles(spec)
    return 4.0 * (gamma * a * a / b + beta * (a + b) / 2.0 + delta * b * b / a)


@dataclass(frozen=True)
class OvalConstruction:
    spec: EllipseSpec
    r: float
    R: float
    p: float
    e: Point
    g: Point
    k: Point
    d_ek: float
    d_gk: float
    d_ge: float
    gamma: float
    beta: float
    delta: float
    j_gk: Point
    j_ek: Point

    @property
    def degenerate(self) -> bool:
        return self.spec.is_circle


def circle_intersections(c0: Point, r0: float, c1: Point, r1: float) -> tuple[Point, Point]:
    """Both intersection points of two circles.

    Raises :class:`DegenerateGeometry` when the circles are concentric or do
    not meet.
    """
    dx, dy = c1[0] - c0[0], c1[1] - c0[1]
    d = math.hypot(dx, dy)
    if d == 0.0:
        raise DegenerateGeometry("concentric circles have no isolated intersection")
    along = (d * d + r0 * r0 - r1 * r1) / (2.0 * d)
    h2 = r0 * r0 - along * along
    if h2 < 0.0:
        if h2 < -1e-12 * r0 * r0:
            raise DegenerateGeometry(
                f"circles do not intersect (d={d!r}, r0={r0!r}, r1={r1!r})"
            )
        h2 = 0.0
    h = math.sqrt(h2)
    ux, uy = dx / d, dy / d
    mx, my = c0[0] + along * ux, c0[1] + along * uy
    return (mx - h * uy, my + h * ux), (mx + h * uy, my - h * ux)


def _side(p: Point, q: Point, x: Point) -> float:
    return (q[0] - p[0]) * (x[1] - p[1]) - (q[1] - p[1]) * (x[0] - p[0])


def _unit(frm: Point, to: Point) -> Point:
    dx, dy = to[0] - frm[0], to[1] - frm[1]
    n = math.hypot(dx, dy)
    return dx / n, dy / n


def construct(spec: EllipseSpec) -> OvalConstruction:
    """Centers, radii, central angles and junction points of the oval."""
    a, b = spec.a, spec.b
    r = b * b / a
    R = a * a / b
    p = 0.5 * (a + b)
    gamma, beta, delta = central_angles(spec)

    if spec.is_circle:
        o = (0.0, 0.0)
        return OvalConstruction(
            spec=spec, r=r, R=R, p=p, e=o, g=o, k=o,
            d_ek=0.0, d_gk=0.0, d_ge=0.0,
            gamma=gamma, beta=beta, delta=delta,
            j_gk=(p * math.sin(gamma), p * math.cos(gamma)),
            j_ek=(p * math.cos(delta), p * math.sin(delta)),
        )

    # factored forms avoid cancellation when a is close to b
    diff, total = a - b, a + b
    e = (diff * total / a, 0.0)
    g = (0.0, -diff * total / b)
    d_ek = diff * (a + 2.0 * b) / (2.0 * a)
    d_gk = diff * (2.0 * a + b) / (2.0 * b)
    d_ge = math.sqrt(ge_squared(a, b))

    k1, k2 = circle_intersections(e, d_ek, g, d_gk)
    origin = (0.0, 0.0)
    ref = _side(g, e, origin)
    k = k1 if _side(g, e, k1) * ref > 0 else k2
    if _side(g, e, k) * ref <= 0:
        raise DegenerateGeometry("no intersection on the origin side of line (g, e)")

    # internal tangency: junctions lie on the line of centers, beyond the
    # smaller circle's center
    uek = _unit(k, e)
    j_ek = (k[0] + p * uek[0], k[1] + p * uek[1])
    ugk = _unit(g, k)
    j_gk = (g[0] + R * ugk[0], g[1] + R * ugk[1])

    return OvalConstruction(
        spec=spec, r=r, R=R, p=p, e=e, g=g, k=k,
        d_ek=d_ek, d_gk=d_gk, d_ge=d_ge,
        gamma=gamma, beta=beta, delta=delta,
        j_gk=j_gk, j_ek=j_ek,
    )


@dataclass(frozen=True)
class TriangleDiagnostics:
    """Angles of triangles (gek) and (geo) solved from measured side lengths.

    ``degenerate`` is set for a circle, where both triangles collapse to a
    point and every angle is NaN.
    """

    alpha_prime: float
    alpha: float
    beta_interior: float
    theta: float
    theta_prime: float
    degenerate: bool = False


def _angle_between(u: Point, v: Point) -> float:
    return math.atan2(abs(u[0] * v[1] - u[1] * v[0]), u[0] * v[0] + u[1] * v[1])


def _law_of_cosines(adjacent1: float, adjacent2: float, opposite: float) -> float:
    c = (adjacent1 ** 2 + adjacent2 ** 2 - opposite ** 2) / (2.0 * adjacent1 * adjacent2)
    return math.acos(min(1.0, max(-1.0, c)))


def angles_geometric(
    c: OvalConstruction,
) -> tuple[float, float, float, TriangleDiagnostics]:
    """Recover ``(gamma, beta, delta)`` from the construction's coordinates.

    Nothing from the closed forms is used: arc angles are measured between
    the vectors center -> arc endpoints, and the triangle diagnostics come
    from side lengths measured between ``g``, ``e``, ``k`` and the origin.
    For a circle the closed-form split is returned with a flagged,
    all-NaN diagnostics record.
    """
    if c.degenerate:
        nan = math.nan
        return c.gamma, c.beta, c.delta, TriangleDiagnostics(nan, nan, nan, nan, nan, True)

    a, b = c.spec.a, c.spec.b
    e, g, k = c.e, c.g, c.k
    top, right = (0.0, b), (a, 0.0)

    def vec(frm: Point, to: Point) -> Point:
        return to[0] - frm[0], to[1] - frm[1]

    gamma = _angle_between(vec(g, top), vec(g, c.j_gk))
    delta = _angle_between(vec(e, right), vec(e, c.j_ek))
    beta = _angle_between(vec(k, c.j_gk), vec(k, c.j_ek))

    ge = math.dist(g, e)
    gk = math.dist(g, k)
    ek = math.dist(e, k)
    go = math.hypot(*g)
    eo = math.hypot(*e)
    alpha_prime = _law_of_cosines(ge, gk, ek)
    # sine law; alpha is acute since |gk| is opposite to it and |ge| is the
    # longest side
    alpha = math.asin(min(1.0, gk / ek * math.sin(alpha_prime)))
    beta_interior = _law_of_cosines(gk, ek, ge)
    theta = math.atan2(eo, go)
    theta_prime = math.atan2(go, eo)
    return gamma, beta, delta, TriangleDiagnostics(
        alpha_prime=alpha_prime,
        alpha=alpha,
        beta_interior=beta_interior,
        theta=theta,
        theta_prime=theta_prime,
    )


@dataclass(frozen=True)
class Arc:
    center: Point
    radius: float
    start: float
    sweep: float

    def __post_init__(self) -> None:
        if not self.radius > 0:
            raise ValueError(f"arc radius must be positive, got {self.radius!r}")
        if abs(self.sweep) > 2.0 * math.pi:
            raise ValueError(f"arc sweep exceeds a full turn: {self.sweep!r}")

    def point_at(self, angle: float) -> Point:
        cx, cy = self.center
        return cx + self.radius * math.cos(angle), cy + self.radius * math.sin(angle)

    @property
    def start_point(self) -> Point:
        return self.point_at(self.start)

    @property
    def endpoint(self) -> Point:
        return self.point_at(self.start + self.sweep)

    @property
    def length(self) -> float:
        return self.radius * abs(self.sweep)


@dataclass(frozen=True)
class OvalPath:
    """``arcs`` runs counterclockwise from the ``-delta`` end of the right
    minor arc; ``quarter`` runs clockwise from ``(0, b)`` to ``(a, 0)``."""

    arcs: tuple[Arc, ...]
    quarter: tuple[Arc, ...]

    @property
    def length(self) -> float:
        return sum(arc.length for arc in self.arcs)


def full_oval(c: OvalConstruction) -> OvalPath:
    gamma, beta, delta = c.gamma, c.beta, c.delta
    (ex, _), (_, gy), (kx, ky) = c.e, c.g, c.k
    r, p, R = c.r, c.p, c.R

    quarter = (
        Arc(c.g, R, HALF_PI, -gamma),
        Arc(c.k, p, HALF_PI - gamma, -beta),
        Arc(c.e, r, delta, -delta),
    )
    arcs = (
        Arc((ex, 0.0), r, -delta, 2.0 * delta),
        Arc((kx, ky), p, delta, beta),
        Arc((0.0, gy), R, HALF_PI - gamma, 2.0 * gamma),
        Arc((-kx, ky), p, HALF_PI + gamma, beta),
        Arc((-ex, 0.0), r, math.pi - delta, 2.0 * delta),
        Arc((-kx, -ky), p, math.pi + delta, beta),
        Arc((0.0, -gy), R, 1.5 * math.pi - gamma, 2.0 * gamma),
        Arc((kx, -ky), p, 1.5 * math.pi + gamma, beta),
    )
    return OvalPath(arcs=arcs, quarter=quarter)
