import math

import pytest
from hypothesis import given, strategies as st

from eightoval import oval
from eightoval.errors import DegenerateGeometry, InvalidAxes
from eightoval.oval import (
    Arc,
    EllipseSpec,
    angles_geometric,
    central_angles,
    construct,
    full_oval,
    normalize_axes,
    oval_perimeter,
)
from oracles import intermediate_center

HALF_PI = 0.5 * math.pi

# (gamma, beta, delta) for (94, 78) from 40-digit mpmath evaluation of the
# closed forms; the geometric route is checked against them separately.
COLOSSEUM_ANGLES = (0.397676672219172, 0.67694712015328, 0.496172534422444)


@st.composite
def specs(draw, lo=1.0, hi=100.0, strict=False):
    a = draw(st.floats(lo, hi))
    b = draw(st.floats(lo, a))
    if strict and not a > b * (1 + 1e-9):
        a = b * (1 + 1e-3)
    return EllipseSpec(a, b)


class TestSpec:
    @pytest.mark.parametrize("a,b", [(1, 2), (0, 0), (1, -1), (math.inf, 1), (math.nan, 1), (1, math.nan)])
    def test_rejects_invalid(self, a, b):
        with pytest.raises(InvalidAxes):
            EllipseSpec(a, b)

    def test_normalize_swaps(self):
        spec, swapped = normalize_axes(1, 2)
        assert (spec.a, spec.b, swapped) == (2, 1, True)
        spec, swapped = normalize_axes(2, 1)
        assert not swapped

    @pytest.mark.parametrize("x,y", [(0, 1), (-1, 2), (math.inf, 1)])
    def test_normalize_rejects(self, x, y):
        with pytest.raises(InvalidAxes):
            normalize_axes(x, y)


class TestConstruct:
    def test_colosseum_radii_and_centers(self):
        c = construct(EllipseSpec(94, 78))
        assert c.r == pytest.approx(64.723404, abs=1e-6)
        assert c.R == pytest.approx(113.282051, abs=1e-6)
        assert c.p == 86
        assert c.e == pytest.approx((29.276596, 0.0), abs=1e-6)
        assert c.g == pytest.approx((0.0, -35.282051), abs=1e-6)

    def test_colosseum_k_matches_oracle(self):
        c = construct(EllipseSpec(94, 78))
        assert c.k == pytest.approx(intermediate_center(94, 78), abs=1e-10)
        assert c.k == pytest.approx((10.565, -10.128), abs=2e-3)

    def test_small_case(self):
        c = construct(EllipseSpec(2, 1))
        assert (c.r, c.R, c.p) == pytest.approx((0.5, 4.0, 1.5), abs=1e-15)
        assert c.e == pytest.approx((1.5, 0.0), abs=1e-15)
        assert c.g == pytest.approx((0.0, -3.0), abs=1e-15)
        # exact: |k - e| = 1 and |k - g| = 5/2 at k = (0.7, -0.6)
        assert c.k == pytest.approx((0.7, -0.6), abs=1e-12)
        assert c.k == pytest.approx(intermediate_center(2, 1), abs=1e-12)
        assert c.j_gk == pytest.approx((1.12, 0.84), abs=1e-12)
        assert c.j_ek == pytest.approx((1.9, 0.3), abs=1e-12)

    @pytest.mark.parametrize("rho", [1e-3, 1.0, 5.0, 1e4])
    def test_circle(self, rho):
        c = construct(EllipseSpec(rho, rho))
        assert c.r == c.R == c.p == rho
        assert c.e == c.g == c.k == (0.0, 0.0)
        assert c.d_ek == c.d_gk == c.d_ge == 0.0
        assert c.degenerate

    @given(specs(strict=True))
    def test_invariants(self, spec):
        c = construct(spec)
        a, b = spec.a, spec.b
        assert math.dist(c.e, c.k) == pytest.approx(c.d_ek, rel=1e-12, abs=1e-12 * a)
        assert math.dist(c.g, c.k) == pytest.approx(c.d_gk, rel=1e-12, abs=1e-12 * a)
        assert c.d_ek == pytest.approx(c.p - c.r, rel=1e-9, abs=1e-12 * a)
        assert c.d_gk == pytest.approx(c.R - c.p, rel=1e-9, abs=1e-12 * a)
        measured = (c.g[0] - c.e[0]) ** 2 + (c.g[1] - c.e[1]) ** 2
        assert c.d_ge ** 2 == pytest.approx(oval.ge_squared(a, b), rel=1e-12)
        assert measured == pytest.approx(oval.ge_squared(a, b), rel=1e-12)

    @given(specs(strict=True))
    def test_tangency_and_collinearity(self, spec):
        c = construct(spec)
        tol = 1e-9 * spec.a
        assert math.dist(c.j_ek, c.e) == pytest.approx(c.r, abs=tol)
        assert math.dist(c.j_ek, c.k) == pytest.approx(c.p, abs=tol)
        assert math.dist(c.j_gk, c.k) == pytest.approx(c.p, abs=tol)
        assert math.dist(c.j_gk, c.g) == pytest.approx(c.R, abs=tol)
        for p0, p1, p2 in ((c.k, c.e, c.j_ek), (c.g, c.k, c.j_gk)):
            d1 = math.atan2(p1[1] - p0[1], p1[0] - p0[0])
            d2 = math.atan2(p2[1] - p0[1], p2[0] - p0[0])
            assert abs(math.remainder(d1 - d2, 2 * math.pi)) < 1e-10

    @given(specs(strict=True))
    def test_k_on_origin_side(self, spec):
        c = construct(spec)
        side = lambda x: (c.e[0] - c.g[0]) * (x[1] - c.g[1]) - (c.e[1] - c.g[1]) * (x[0] - c.g[0])
        assert side(c.k) * side((0.0, 0.0)) > 0

    def test_k_branch_hugs_ellipse(self):
        # the chosen intermediate circle passes close to the ellipse near the
        # quadrant diagonal; the other branch does not
        spec = EllipseSpec(94, 78)
        c = construct(spec)
        t = math.atan2(spec.a * math.sin(math.pi / 4), spec.b * math.cos(math.pi / 4))
        x, y = c.k[0] + c.p * math.cos(t), c.k[1] + c.p * math.sin(t)
        assert (x / spec.a) ** 2 + (y / spec.b) ** 2 == pytest.approx(1.0, abs=1e-2)

    def test_circle_intersections_rejects_disjoint(self):
        with pytest.raises(DegenerateGeometry):
            oval.circle_intersections((0, 0), 1, (5, 0), 1)
        with pytest.raises(DegenerateGeometry):
            oval.circle_intersections((0, 0), 1, (0, 0), 2)


class TestCentralAngles:
    def test_circle_sines(self):
        for rho in (0.3, 1.0, 42.0):
            assert oval.sin_gamma(rho, rho) == pytest.approx((4 - math.sqrt(2)) / 6, abs=1e-14)
            assert oval.sin_beta(rho, rho) == pytest.approx(4 * math.sqrt(2) / 9, abs=1e-14)
            assert oval.sin_delta(rho, rho) == pytest.approx((4 - math.sqrt(2)) / 6, abs=1e-14)

    def test_double_angle_identity(self):
        # 2 asin((4 - sqrt 2)/6) = asin(7/9), which completes asin(4 sqrt 2 / 9) to pi/2
        s = (4 - math.sqrt(2)) / 6
        assert 2 * math.asin(s) == pytest.approx(math.asin(7 / 9), abs=1e-15)
        assert math.asin(7 / 9) + math.asin(4 * math.sqrt(2) / 9) == pytest.approx(HALF_PI, abs=1e-15)

    def test_small_case_exact_sines(self):
        assert oval.sin_gamma(2, 1) == pytest.approx(0.28, abs=1e-14)
        assert oval.sin_beta(2, 1) == pytest.approx(0.6, abs=1e-14)
        assert oval.sin_delta(2, 1) == pytest.approx(0.6, abs=1e-14)
        gamma, beta, delta = central_angles(EllipseSpec(2, 1))
        assert gamma == pytest.approx(0.283794, abs=1e-6)
        assert beta == pytest.approx(0.643501, abs=1e-6)
        assert delta == pytest.approx(0.643501, abs=1e-6)
        assert gamma + beta + delta == pytest.approx(HALF_PI, abs=1e-15)

    def test_colosseum(self):
        angles = central_angles(EllipseSpec(94, 78))
        assert angles == pytest.approx(COLOSSEUM_ANGLES, abs=1e-14)
        # rounded figures carried alongside the construction
        assert angles == pytest.approx((0.397678, 0.676947, 0.496176), abs=5e-6)

    @given(specs())
    def test_angle_sum(self, spec):
        assert sum(central_angles(spec)) == pytest.approx(HALF_PI, abs=1e-10)

    @given(specs())
    def test_ranges(self, spec):
        a, b = spec.a, spec.b
        for f in (oval.sin_gamma, oval.sin_beta, oval.sin_delta, oval.sin_alpha_prime, oval.sin_alpha):
            assert 0.0 < f(a, b) <= 1.0
        for angle in central_angles(spec):
            assert 0.0 < angle <= HALF_PI

    @given(st.floats(1e-3, 1e3), st.floats(1e-3, 1e3))
    def test_symmetry(self, x, y):
        assert oval.sin_gamma(x, y) == pytest.approx(oval.sin_delta(y, x), abs=1e-14)
        assert oval.sin_beta(x, y) == pytest.approx(oval.sin_beta(y, x), abs=1e-14)

    def test_beta_sine_peaks_at_circle(self):
        # numerical support for sin(beta) < 1: it depends on a/b only and is
        # largest at a = b
        peak = 4 * math.sqrt(2) / 9
        for i in range(1, 20001):
            ratio = 1.0 + i * 1e-3
            assert oval.sin_beta(ratio, 1.0) < peak

    @given(specs())
    def test_alpha_prime_cosine_route(self, spec):
        a, b = spec.a, spec.b
        assert oval.sin_alpha_prime(a, b) ** 2 + oval.cos_alpha_prime(a, b) ** 2 == pytest.approx(1.0, abs=1e-14)
        assert oval.sin_alpha(a, b) ** 2 + oval.cos_alpha(a, b) ** 2 == pytest.approx(1.0, abs=1e-14)

    def test_clamp(self):
        assert oval._safe_asin(1.0 + 5e-13, "x") == HALF_PI
        with pytest.raises(DegenerateGeometry):
            oval._safe_asin(1.0 + 1e-9, "x")


class TestGeometricOracle:
    def test_colosseum(self):
        c = construct(EllipseSpec(94, 78))
        gamma, beta, delta, diag = angles_geometric(c)
        assert (gamma, beta, delta) == pytest.approx(COLOSSEUM_ANGLES, abs=1e-10)
        assert math.sin(diag.alpha_prime) == pytest.approx(
            78 / 266 * math.sqrt(2 * 94 * 78 / (94 ** 2 + 78 ** 2)), abs=1e-12
        )
        assert math.cos(diag.alpha_prime) == pytest.approx(oval.cos_alpha_prime(94, 78), abs=1e-12)

    def test_small_case_steps(self):
        c = construct(EllipseSpec(2, 1))
        gamma, beta, delta, diag = angles_geometric(c)
        assert diag.theta == pytest.approx(math.asin(1 / math.sqrt(5)), abs=1e-14)
        assert diag.theta_prime == pytest.approx(math.asin(2 / math.sqrt(5)), abs=1e-14)
        assert gamma == pytest.approx(diag.theta - diag.alpha_prime, abs=1e-12)
        assert delta == pytest.approx(diag.theta_prime - diag.alpha, abs=1e-12)

    @given(specs(strict=True))
    def test_matches_closed_form(self, spec):
        c = construct(spec)
        geo = angles_geometric(c)[:3]
        assert geo == pytest.approx(central_angles(spec), abs=1e-10)

    @given(specs(strict=True))
    def test_triangle_diagnostics(self, spec):
        a, b = spec.a, spec.b
        diag = angles_geometric(construct(spec))[3]
        assert diag.alpha + diag.alpha_prime + diag.beta_interior == pytest.approx(math.pi, abs=1e-10)
        assert diag.theta + diag.theta_prime == pytest.approx(HALF_PI, abs=1e-12)
        assert math.sin(diag.alpha_prime) == pytest.approx(oval.sin_alpha_prime(a, b), abs=1e-10)
        assert math.sin(diag.alpha) == pytest.approx(oval.sin_alpha(a, b), abs=1e-10)
        assert math.sin(diag.theta) == pytest.approx(oval.sin_theta(a, b), abs=1e-12)

    def test_circle_flagged(self):
        c = construct(EllipseSpec(3, 3))
        gamma, beta, delta, diag = angles_geometric(c)
        assert (gamma, beta, delta) == central_angles(EllipseSpec(3, 3))
        assert diag.degenerate
        assert math.isnan(diag.alpha)


class TestFullOval:
    @pytest.mark.parametrize("rho", [0.5, 5.0])
    def test_circle(self, rho):
        path = full_oval(construct(EllipseSpec(rho, rho)))
        assert len(path.arcs) == 8
        assert all(arc.center == (0.0, 0.0) and arc.radius == rho for arc in path.arcs)
        assert sum(abs(arc.sweep) for arc in path.arcs) == pytest.approx(2 * math.pi, abs=1e-12)

    def test_colosseum_quarter(self):
        c = construct(EllipseSpec(94, 78))
        major, middle, minor = full_oval(c).quarter
        assert major.start_point == pytest.approx((0.0, 78.0), abs=1e-12)
        assert major.endpoint == pytest.approx(c.j_gk, abs=1e-9)
        assert middle.start_point == pytest.approx(c.j_gk, abs=1e-9)
        assert middle.endpoint == pytest.approx(c.j_ek, abs=1e-9)
        assert minor.start_point == pytest.approx(c.j_ek, abs=1e-9)
        assert minor.endpoint == pytest.approx((94.0, 0.0), abs=1e-12)
        assert (major.center, middle.center, minor.center) == (c.g, c.k, c.e)

    @given(specs())
    def test_path_integrity(self, spec):
        c = construct(spec)
        path = full_oval(c)
        arcs = path.arcs
        for i, arc in enumerate(arcs):
            nxt = arcs[(i + 1) % len(arcs)]
            assert math.dist(arc.endpoint, nxt.start_point) <= 1e-9 * spec.a
        assert sum(abs(arc.sweep) for arc in arcs) == pytest.approx(2 * math.pi, abs=1e-10)
        assert path.length == pytest.approx(oval_perimeter(spec), rel=1e-12)
        if not c.degenerate:
            assert len({arc.center for arc in arcs}) == 8

    def test_arc_validation(self):
        with pytest.raises(ValueError):
            Arc((0, 0), 0.0, 0.0, 1.0)
        with pytest.raises(ValueError):
            Arc((0, 0), 1.0, 0.0, 7.0)

    def test_arc_endpoint_rule(self):
        arc = Arc((1.0, 2.0), 3.0, 0.25, -1.0)
        assert arc.endpoint == (1.0 + 3.0 * math.cos(-0.75), 2.0 + 3.0 * math.sin(-0.75))


class TestPerimeter:
    def test_colosseum(self):
        assert oval_perimeter(EllipseSpec(94, 78)) == pytest.approx(541.523, abs=5e-3)

    def test_small_case(self):
        # 4 [asin(.28) * 4 + asin(.6) * 1.5 + asin(.6) * .5]
        expected = 4 * (math.asin(0.28) * 4 + math.asin(0.6) * 2.0)
        assert oval_perimeter(EllipseSpec(2, 1)) == pytest.approx(expected, rel=1e-15)
        assert oval_perimeter(EllipseSpec(2, 1)) == pytest.approx(9.68872, abs=1e-4)

    @pytest.mark.parametrize("rho", [1e-3, 1.0, 7.3, 1e4])
    def test_circle(self, rho):
        assert oval_perimeter(EllipseSpec(rho, rho)) == pytest.approx(2 * math.pi * rho, rel=1e-12)

    @given(specs(), st.floats(1e-3, 1e3))
    def test_homogeneous(self, spec, s):
        scaled = oval_perimeter(EllipseSpec(s * spec.a, s * spec.b))
        assert scaled == pytest.approx(s * oval_perimeter(spec), rel=1e-12)
