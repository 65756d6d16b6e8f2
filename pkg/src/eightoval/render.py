"""SVG diagrams of the oval construction and of the oval over its ellipse.

World coordinates are mathematical (y up); the flip to SVG's y-down frame
lives entirely in :class:`Viewport`. Output is plain text built without any
dict-ordered or time-dependent state, so identical inputs give identical
bytes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from xml.sax.saxutils import escape

from .oval import Arc, EllipseSpec, OvalConstruction, construct, full_oval

LAYERS = ("ellipse", "oval", "osculating", "auxiliary", "centers", "junctions", "labels")

MINOR_COLOR = "#1f4fd8"
INTERMEDIATE_COLOR = "#1a9a3a"
MAJOR_COLOR = "#d8261f"
ELLIPSE_COLOR = "#222222"

ELLIPSE_SAMPLES = 512


@dataclass(frozen=True)
class RenderOptions:
    width_px: int = 800
    height_px: int = 800
    margin_fraction: float = 0.05
    layers: frozenset[str] = field(default_factory=lambda: frozenset(LAYERS))

    def __post_init__(self) -> None:
        if self.width_px < 64 or self.height_px < 64:
            raise ValueError(
                f"canvas must be at least 64x64 px, got {self.width_px}x{self.height_px}"
            )
        if not 0.0 <= self.margin_fraction <= 0.4:
            raise ValueError(f"margin_fraction must lie in [0, 0.4], got {self.margin_fraction!r}")
        unknown = set(self.layers) - set(LAYERS)
        if unknown:
            raise ValueError(f"unknown layers: {sorted(unknown)}")
        object.__setattr__(self, "layers", frozenset(self.layers))


def fmt(x: float) -> str:
    s = f"{x:.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


class Viewport:
    """Uniform-scale affine map from a world box onto the canvas, y flipped."""

    def __init__(self, bbox: tuple[float, float, float, float], opts: RenderOptions):
        xmin, ymin, xmax, ymax = bbox
        w, h = opts.width_px, opts.height_px
        usable_w = w * (1.0 - 2.0 * opts.margin_fraction)
        usable_h = h * (1.0 - 2.0 * opts.margin_fraction)
        span_x = max(xmax - xmin, 1e-300)
        span_y = max(ymax - ymin, 1e-300)
        self.scale = min(usable_w / span_x, usable_h / span_y)
        self.cx_world = 0.5 * (xmin + xmax)
        self.cy_world = 0.5 * (ymin + ymax)
        self.cx_px = 0.5 * w
        self.cy_px = 0.5 * h

    def __call__(self, x: float, y: float) -> tuple[float, float]:
        return (
            self.cx_px + self.scale * (x - self.cx_world),
            self.cy_px - self.scale * (y - self.cy_world),
        )

    def length(self, d: float) -> float:
        return self.scale * d


def _pt(vp: Viewport, p: tuple[float, float]) -> str:
    x, y = vp(*p)
    return f"{fmt(x)},{fmt(y)}"


def arc_segment(vp: Viewport, arc: Arc) -> str:
    """SVG ``A`` command drawing ``arc`` from its current start point."""
    rad = fmt(vp.length(arc.radius))
    large = 1 if abs(arc.sweep) > math.pi else 0
    # the y flip turns counterclockwise world arcs into SVG sweep-flag 0
    sweep_flag = 0 if arc.sweep > 0 else 1
    x, y = vp(*arc.endpoint)
    return f"A {rad} {rad} 0 {large} {sweep_flag} {fmt(x)},{fmt(y)}"


def ellipse_points(spec: EllipseSpec, n: int = ELLIPSE_SAMPLES) -> list[tuple[float, float]]:
    return [
        (spec.a * math.cos(2.0 * math.pi * i / n), spec.b * math.sin(2.0 * math.pi * i / n))
        for i in range(n)
    ]


def _ellipse_path(vp: Viewport, spec: EllipseSpec, stroke_width: float) -> str:
    pts = ellipse_points(spec)
    d = "M " + " L ".join(_pt(vp, p) for p in pts) + " Z"
    return (
        f'<path class="ellipse" d="{d}" fill="none" stroke="{ELLIPSE_COLOR}" '
        f'stroke-width="{fmt(stroke_width)}"/>'
    )


def _circle(vp: Viewport, center, radius: float, cls: str, color: str, extra: str = "") -> str:
    cx, cy = vp(*center)
    return (
        f'<circle class="{cls}" cx="{fmt(cx)}" cy="{fmt(cy)}" r="{fmt(vp.length(radius))}" '
        f'fill="none" stroke="{color}"{extra}/>'
    )


def _marker(vp: Viewport, point, cls: str, name: str) -> str:
    cx, cy = vp(*point)
    return (
        f'<circle class="{cls}" data-name="{escape(name)}" cx="{fmt(cx)}" cy="{fmt(cy)}" '
        f'r="3" fill="#000000"/>'
    )


def _text(vp: Viewport, point, label: str, dx: float = 6.0, dy: float = -6.0) -> str:
    x, y = vp(*point)
    return (
        f'<text class="label" x="{fmt(x + dx)}" y="{fmt(y + dy)}" '
        f'font-family="serif" font-size="16">{escape(label)}</text>'
    )


def _document(opts: RenderOptions, groups: list[tuple[str, list[str]]]) -> str:
    w, h = opts.width_px, opts.height_px
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        f'<rect class="background" x="0" y="0" width="{w}" height="{h}" fill="#ffffff"/>',
    ]
    for name, body in groups:
        lines.append(f'<g id="layer-{name}">')
        lines.extend("  " + item for item in body)
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def construction_bbox(c: OvalConstruction, layers) -> tuple[float, float, float, float]:
    a, b = c.spec.a, c.spec.b
    xs, ys = [-a, a], [-b, b]

    def add_circle(center, radius):
        xs.extend((center[0] - radius, center[0] + radius))
        ys.extend((center[1] - radius, center[1] + radius))

    if "centers" in layers or "labels" in layers:
        for p in (c.e, c.g, c.k):
            xs.append(p[0])
            ys.append(p[1])
    if "osculating" in layers:
        add_circle(c.e, c.r)
        add_circle(c.g, c.R)
    if "auxiliary" in layers and not c.degenerate:
        add_circle(c.e, c.d_ek)
        add_circle(c.g, c.d_gk)
    return min(xs), min(ys), max(xs), max(ys)


def render_construction(c: OvalConstruction, opts: RenderOptions | None = None) -> str:
    """Figure of the first-quadrant construction.

    Layers: the sampled ellipse, the three quarter arcs (minor blue,
    intermediate green, major red), both osculating circles, both auxiliary
    circles, markers for e, g, k, markers for the two junctions, and text
    labels. A circle collapses the oval layer to one ``<circle>`` and drops
    the zero-radius auxiliary circles and junction markers.
    """
    opts = opts or RenderOptions()
    layers = opts.layers
    vp = Viewport(construction_bbox(c, layers), opts)
    path = full_oval(c)
    groups: list[tuple[str, list[str]]] = []

    if "ellipse" in layers:
        groups.append(("ellipse", [_ellipse_path(vp, c.spec, 1.0)]))

    if "oval" in layers:
        if c.degenerate:
            body = [_circle(vp, c.k, c.p, "oval-circle", ELLIPSE_COLOR, ' stroke-width="2.5"')]
        else:
            body = []
            for arc, cls, color in zip(
                path.quarter,
                ("arc major", "arc intermediate", "arc minor"),
                (MAJOR_COLOR, INTERMEDIATE_COLOR, MINOR_COLOR),
            ):
                d = f"M {_pt(vp, arc.start_point)} {arc_segment(vp, arc)}"
                body.append(
                    f'<path class="{cls}" d="{d}" fill="none" stroke="{color}" stroke-width="2.5"/>'
                )
        groups.append(("oval", body))

    if "osculating" in layers:
        groups.append(("osculating", [
            _circle(vp, c.e, c.r, "osculating minor", MINOR_COLOR, ' stroke-dasharray="6 4"'),
            _circle(vp, c.g, c.R, "osculating major", MAJOR_COLOR, ' stroke-dasharray="6 4"'),
        ]))

    if "auxiliary" in layers:
        body = []
        if not c.degenerate:
            body = [
                _circle(vp, c.e, c.d_ek, "auxiliary minor", MINOR_COLOR, ' stroke-dasharray="2 3"'),
                _circle(vp, c.g, c.d_gk, "auxiliary major", MAJOR_COLOR, ' stroke-dasharray="2 3"'),
            ]
        groups.append(("auxiliary", body))

    if "centers" in layers:
        if c.degenerate:
            body = [_marker(vp, c.k, "center", "o")]
        else:
            body = [
                _marker(vp, c.e, "center", "e"),
                _marker(vp, c.g, "center", "g"),
                _marker(vp, c.k, "center", "k"),
            ]
        groups.append(("centers", body))

    if "junctions" in layers:
        body = []
        if not c.degenerate:
            body = [
                _marker(vp, c.j_gk, "junction", "j_gk"),
                _marker(vp, c.j_ek, "junction", "j_ek"),
            ]
        groups.append(("junctions", body))

    if "labels" in layers:
        body = []
        if c.degenerate:
            body.append(_text(vp, c.k, "o"))
        else:
            body.extend(_text(vp, p, name) for p, name in ((c.e, "e"), (c.g, "g"), (c.k, "k")))
        for arc, name in zip(path.quarter, ("γ", "β", "δ")):
            mid = arc.point_at(arc.start + 0.5 * arc.sweep)
            body.append(_text(vp, mid, name, dx=-14.0, dy=-8.0))
        groups.append(("labels", body))

    return _document(opts, groups)


def render_overlay(spec: EllipseSpec, opts: RenderOptions | None = None) -> str:
    """Whole eight-arc oval drawn as one closed path over the sampled ellipse."""
    opts = opts or RenderOptions()
    a, b = spec.a, spec.b
    vp = Viewport((-a, -b, a, b), opts)
    path = full_oval(construct(spec))
    segments = [f"M {_pt(vp, path.arcs[0].start_point)}"]
    segments.extend(arc_segment(vp, arc) for arc in path.arcs)
    segments.append("Z")
    oval = (
        f'<path class="oval" d="{" ".join(segments)}" fill="none" '
        f'stroke="{INTERMEDIATE_COLOR}" stroke-width="3"/>'
    )
    return _document(opts, [
        ("ellipse", [_ellipse_path(vp, spec, 1.0)]),
        ("oval", [oval]),
    ])
