"""Error sweeps of the oval perimeter and oval-vs-ellipse shape deviation."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

from .ellipse_ref import compare
from .errors import GridTooLarge, InvalidRange
from .oval import EllipseSpec, construct, full_oval

MAX_CELLS = 1_000_000
CSV_HEADER = ("a", "b", "rel_err_percent")


@dataclass(frozen=True)
class SweepCell:
    a: float
    b: float
    rel_err: float


@dataclass(frozen=True)
class SweepGrid:
    a_range: tuple[float, float]
    b_range: tuple[float, float]
    step: float
    cells: tuple[SweepCell, ...]
    max_err: float
    argmax_cell: tuple[float, float] | None

    def as_dict(self) -> dict:
        return {
            "a_range": list(self.a_range),
            "b_range": list(self.b_range),
            "step": self.step,
            "unit": "fraction",
            "max_err": self.max_err,
            "argmax_cell": None if self.argmax_cell is None else list(self.argmax_cell),
            "cells": [{"a": c.a, "b": c.b, "rel_err": c.rel_err} for c in self.cells],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for c in self.cells:
            writer.writerow((repr(c.a), repr(c.b), repr(100.0 * c.rel_err)))
        return buf.getvalue()


def _axis(lo: float, hi: float, step: float, name: str) -> list[float]:
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise InvalidRange(f"{name} range must be finite, got [{lo!r}, {hi!r}]")
    if lo <= 0:
        raise InvalidRange(f"{name} range must be positive, got lower bound {lo!r}")
    if hi < lo:
        raise InvalidRange(f"{name} range is reversed: [{lo!r}, {hi!r}]")
    n = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return [lo + i * step for i in range(n)]


def grid_axes(
    a_range: tuple[float, float], b_range: tuple[float, float], step: float
) -> tuple[list[float], list[float]]:
    if not (math.isfinite(step) and step > 0):
        raise InvalidRange(f"step must be positive and finite, got {step!r}")
    for lo, hi in (a_range, b_range):
        if math.isfinite(lo) and math.isfinite(hi) and (hi - lo) / step + 1 > MAX_CELLS:
            raise GridTooLarge(f"axis [{lo}, {hi}] with step {step} exceeds {MAX_CELLS} points")
    a_values = _axis(*a_range, step, "a")
    b_values = _axis(*b_range, step, "b")
    if len(a_values) * len(b_values) > MAX_CELLS:
        raise GridTooLarge(
            f"{len(a_values)} x {len(b_values)} grid exceeds {MAX_CELLS} cells"
        )
    return a_values, b_values


def sweep(
    a_range: tuple[float, float],
    b_range: tuple[float, float],
    step: float = 0.25,
) -> SweepGrid:
    """Relative oval-vs-ellipse perimeter error over a rectangular grid.

    Only cells with ``b <= a`` are evaluated. Cells come out row-major with
    ``a`` as the outer loop.
    """
    a_values, b_values = grid_axes(a_range, b_range, step)
    cells = []
    for a in a_values:
        for b in b_values:
            if b > a:
                continue
            cells.append(SweepCell(a, b, compare(EllipseSpec(a, b)).rel_err_oval))

    max_err, argmax = 0.0, None
    for c in cells:
        if argmax is None or c.rel_err > max_err:
            max_err, argmax = c.rel_err, (c.a, c.b)
    return SweepGrid(
        a_range=(float(a_range[0]), float(a_range[1])),
        b_range=(float(b_range[0]), float(b_range[1])),
        step=float(step),
        cells=tuple(cells),
        max_err=max_err,
        argmax_cell=argmax,
    )


@dataclass(frozen=True)
class DeviationReport:
    spec: EllipseSpec
    max_radial_dev: float
    argmax_angle: float
    samples: int


def ellipse_radius(spec: EllipseSpec, phi: float) -> float:
    """Distance from the center to the ellipse along polar angle ``phi``."""
    a, b = spec.a, spec.b
    return a * b / math.hypot(b * math.cos(phi), a * math.sin(phi))


def _ray_circle(center: tuple[float, float], radius: float, phi: float) -> tuple[float, ...]:
    ux, uy = math.cos(phi), math.sin(phi)
    proj = ux * center[0] + uy * center[1]
    disc = proj * proj - (center[0] ** 2 + center[1] ** 2) + radius * radius
    if disc < 0.0:
        return ()
    root = math.sqrt(disc)
    return tuple(t for t in (proj + root, proj - root) if t > 0.0)


class QuarterOvalRadius:
    """Polar radius of the first-quadrant oval about the origin."""

    def __init__(self, spec: EllipseSpec):
        c = construct(spec)
        self.spec = spec
        self.quarter = full_oval(c).quarter
        self.phi_ek = math.atan2(c.j_ek[1], c.j_ek[0])
        self.phi_gk = math.atan2(c.j_gk[1], c.j_gk[0])

    def __call__(self, phi: float) -> float:
        major, middle, minor = self.quarter
        if phi <= self.phi_ek:
            arc = minor
        elif phi <= self.phi_gk:
            arc = middle
        else:
            arc = major
        lo = min(arc.start, arc.start + arc.sweep)
        hi = max(arc.start, arc.start + arc.sweep)
        best, best_miss = None, math.inf
        for t in _ray_circle(arc.center, arc.radius, phi):
            x = t * math.cos(phi) - arc.center[0]
            y = t * math.sin(phi) - arc.center[1]
            ang = math.atan2(y, x)
            miss = max(lo - ang, ang - hi, 0.0)
            if miss < best_miss:
                best, best_miss = t, miss
        if best is None:
            # ray grazes the arc's circle; only reachable through rounding
            proj = math.cos(phi) * arc.center[0] + math.sin(phi) * arc.center[1]
            best = max(proj, 0.0)
        return best


def radial_deviation(spec: EllipseSpec, samples: int = 4096) -> DeviationReport:
    """Largest radial gap between oval and ellipse over ``samples`` polar
    angles spread uniformly over ``[0, pi/2]`` (both ends included)."""
    if samples < 16:
        raise ValueError(f"samples must be at least 16, got {samples!r}")
    oval_r = QuarterOvalRadius(spec)
    best, best_phi = -1.0, 0.0
    for i in range(samples):
        phi = 0.5 * math.pi * i / (samples - 1)
        dev = abs(oval_r(phi) - ellipse_radius(spec, phi))
        if dev > best:
            best, best_phi = dev, phi
    return DeviationReport(spec=spec, max_radial_dev=best, argmax_angle=best_phi, samples=samples)
