"""Command-line front end.

Exit codes: 0 success, 1 failed check, 2 input error, 3 I/O error.

    eightoval params 94 78
    eightoval perimeter 2 1 --format json
    eightoval sweep 1 10 1 10 0.25 --format csv -o sweep.csv
    eightoval svg 94 78 --mode construction -o fig1.svg
    eightoval check 94 78
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Callable

from . import analysis, ellipse_ref, oval, render
from .errors import OvalError

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT = 2
EXIT_IO = 3


class InputError(Exception):
    pass


def _g6(x: float) -> str:
    return f"{x:.6g}"


def _point(p) -> str:
    return f"({_g6(p[0])}, {_g6(p[1])})"


def _spec(args) -> tuple[oval.EllipseSpec, bool]:
    try:
        return oval.normalize_axes(args.a, args.b)
    except OvalError as exc:
        raise InputError(f"invalid axes: {exc}") from exc


def _swap_notice(swapped: bool, spec: oval.EllipseSpec) -> list[str]:
    if not swapped:
        return []
    return [f"note: axes swapped so that a >= b; results are for a={_g6(spec.a)}, b={_g6(spec.b)}"]


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        out.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise IOError(f"cannot write {out}: {exc}") from exc


def params_dict(spec: oval.EllipseSpec, swapped: bool) -> dict:
    c = oval.construct(spec)
    angles = {
        name: {"rad": val, "deg": math.degrees(val)}
        for name, val in (("gamma", c.gamma), ("beta", c.beta), ("delta", c.delta))
    }
    return {
        "a": spec.a,
        "b": spec.b,
        "swapped": swapped,
        "degenerate": c.degenerate,
        "r": c.r,
        "p": c.p,
        "R": c.R,
        "e": list(c.e),
        "g": list(c.g),
        "k": list(c.k),
        "j_gk": list(c.j_gk),
        "j_ek": list(c.j_ek),
        "angles": angles,
    }


def cmd_params(args) -> int:
    spec, swapped = _spec(args)
    if args.format == "json":
        sys.stdout.write(_dump_json(params_dict(spec, swapped)))
        return EXIT_OK
    c = oval.construct(spec)
    lines = _swap_notice(swapped, spec)
    if c.degenerate:
        lines.append("note: a = b, the oval degenerates to a circle; e = g = k = (0, 0)")
    lines += [
        f"a = {_g6(spec.a)}    b = {_g6(spec.b)}",
        f"{'circle':<14}{'center':<26}{'radius':>12}{'angle (rad)':>14}{'angle (deg)':>14}",
        f"{'major':<14}{'g ' + _point(c.g):<26}{'R = ' + _g6(c.R):>12}"
        f"{'γ = ' + _g6(c.gamma):>14}{_g6(math.degrees(c.gamma)):>14}",
        f"{'intermediate':<14}{'k ' + _point(c.k):<26}{'p = ' + _g6(c.p):>12}"
        f"{'β = ' + _g6(c.beta):>14}{_g6(math.degrees(c.beta)):>14}",
        f"{'minor':<14}{'e ' + _point(c.e):<26}{'r = ' + _g6(c.r):>12}"
        f"{'δ = ' + _g6(c.delta):>14}{_g6(math.degrees(c.delta)):>14}",
    ]
    if not c.degenerate:
        lines += [
            f"junction major/intermediate  {_point(c.j_gk)}",
            f"junction intermediate/minor  {_point(c.j_ek)}",
        ]
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_perimeter(args) -> int:
    spec, swapped = _spec(args)
    report = ellipse_ref.compare(spec)
    dev = analysis.radial_deviation(spec, args.samples)
    if args.format == "json":
        payload = report.as_dict()
        payload["swapped"] = swapped
        payload["max_radial_dev"] = dev.max_radial_dev
        payload["samples"] = dev.samples
        sys.stdout.write(_dump_json(payload))
        return EXIT_OK
    lines = _swap_notice(swapped, spec) + [
        f"a = {_g6(spec.a)}    b = {_g6(spec.b)}    eccentricity = "
        f"{ellipse_ref.eccentricity(spec).epsilon:.4g}",
        f"oval perimeter O     = {_g6(report.oval)}",
        f"ellipse perimeter L  = {_g6(report.elliptic)}",
        f"Kepler pi(a+b)       = {_g6(report.kepler)}",
        f"rel err oval         = {_g6(100.0 * report.rel_err_oval)} %",
        f"rel err Kepler       = {_g6(100.0 * report.rel_err_kepler)} %",
        f"max radial gap       = {_g6(dev.max_radial_dev)} ({dev.samples} samples)",
    ]
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.step is not None and args.step_opt is not None and args.step != args.step_opt:
        raise InputError("step given twice with different values")
    step = args.step if args.step is not None else args.step_opt
    if step is None:
        step = 0.25
    if args.format not in ("csv", "json"):
        raise InputError("sweep supports --format csv or json")
    try:
        grid = analysis.sweep((args.a_min, args.a_max), (args.b_min, args.b_max), step)
    except OvalError as exc:
        raise InputError(f"invalid range: {exc}") from exc
    data = grid.to_csv() if args.format == "csv" else grid.to_json()
    _emit(data, args.out)
    summary = [f"cells: {len(grid.cells)}"]
    if grid.argmax_cell is None:
        summary.append("no cells with b <= a in the requested ranges")
    else:
        pct = 100.0 * grid.max_err
        verdict = "<" if grid.max_err < 2.9e-4 else ">="
        summary.append(
            f"max rel err = {_g6(pct)} % at a = {_g6(grid.argmax_cell[0])}, "
            f"b = {_g6(grid.argmax_cell[1])} (max rel err {verdict} 0.029%)"
        )
    stream = sys.stdout if args.out is not None else sys.stderr
    stream.write("\n".join(summary) + "\n")
    return EXIT_OK


def cmd_svg(args) -> int:
    spec, swapped = _spec(args)
    layers = render.LAYERS if args.layers is None else tuple(
        name for name in args.layers.split(",") if name
    )
    try:
        opts = render.RenderOptions(
            width_px=args.width,
            height_px=args.height,
            margin_fraction=args.margin,
            layers=frozenset(layers),
        )
    except ValueError as exc:
        raise InputError(f"invalid render options: {exc}") from exc
    if args.mode == "construction":
        doc = render.render_construction(oval.construct(spec), opts)
    else:
        doc = render.render_overlay(spec, opts)
    for line in _swap_notice(swapped, spec):
        sys.stderr.write(line + "\n")
    _emit(doc, args.out)
    return EXIT_OK


def run_checks(spec: oval.EllipseSpec) -> list[tuple[str, bool, str]]:
    """Invariant checks on one spec, as ``(name, passed, detail)`` rows."""
    results = []
    a = spec.a
    c = oval.construct(spec)
    gamma, beta, delta = c.gamma, c.beta, c.delta

    s = gamma + beta + delta - 0.5 * math.pi
    results.append(("angle sum", abs(s) <= 1e-10, f"gamma+beta+delta-pi/2 = {s:.3e}"))

    if c.degenerate:
        results.append(("tangency", True, "skipped: circle has no distinct centers"))
    else:
        worst = max(
            abs(math.dist(c.j_ek, c.e) - c.r),
            abs(math.dist(c.j_ek, c.k) - c.p),
            abs(math.dist(c.j_gk, c.k) - c.p),
            abs(math.dist(c.j_gk, c.g) - c.R),
        )
        results.append(("tangency", worst <= 1e-9 * a, f"max distance mismatch = {worst:.3e}"))

    g2, b2, d2, _ = oval.angles_geometric(c)
    diff = max(abs(g2 - gamma), abs(b2 - beta), abs(d2 - delta))
    results.append(("oracle equivalence", diff <= 1e-10, f"max angle difference = {diff:.3e}"))

    path = oval.full_oval(c)
    gap = max(
        math.dist(path.arcs[i].endpoint, path.arcs[(i + 1) % 8].start_point) for i in range(8)
    )
    results.append(("path closure", gap <= 1e-9 * a, f"max endpoint gap = {gap:.3e}"))

    o = oval.oval_perimeter(spec)
    worst_h = 0.0
    for scale in (1e-3, 0.37, 1e3):
        scaled = oval.oval_perimeter(oval.EllipseSpec(scale * spec.a, scale * spec.b))
        worst_h = max(worst_h, abs(scaled - scale * o) / (scale * o))
    results.append(("homogeneity", worst_h <= 1e-12, f"max relative deviation = {worst_h:.3e}"))

    circ = oval.oval_perimeter(oval.EllipseSpec(spec.b, spec.b))
    rel = abs(circ - 2.0 * math.pi * spec.b) / (2.0 * math.pi * spec.b)
    results.append(("circle reduction", rel <= 1e-12, f"O(b,b)/(2 pi b) - 1 = {rel:.3e}"))
    return results


def cmd_check(args) -> int:
    spec, swapped = _spec(args)
    lines = _swap_notice(swapped, spec)
    rows = run_checks(spec)
    failed = [name for name, ok, _ in rows if not ok]
    for name, ok, detail in rows:
        lines.append(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    if failed:
        lines.append("failed: " + ", ".join(failed))
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eightoval", description="Eight-centered oval approximation of an ellipse."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def axes(p):
        p.add_argument("a", type=float, help="semi-axis (the larger one is taken as a)")
        p.add_argument("b", type=float, help="other semi-axis")

    p = sub.add_parser("params", help="centers, radii and central angles")
    axes(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("perimeter", help="oval, elliptic-integral and Kepler perimeters")
    axes(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--samples", type=int, default=4096, help="polar samples for the radial gap")
    p.set_defaults(func=cmd_perimeter)

    p = sub.add_parser("sweep", help="relative perimeter error over an (a, b) grid")
    for name in ("a_min", "a_max", "b_min", "b_max"):
        p.add_argument(name, type=float)
    p.add_argument("step", type=float, nargs="?", default=None)
    p.add_argument("--step", dest="step_opt", type=float, default=None)
    p.add_argument("--format", choices=("text", "csv", "json"), default="csv")
    p.add_argument("-o", "--out", type=Path, default=None)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("svg", help="write an SVG diagram")
    axes(p)
    p.add_argument("--mode", choices=("construction", "overlay"), default="construction")
    p.add_argument("-o", "--out", type=Path, default=None)
    p.add_argument("--width", type=_positive_int, default=800)
    p.add_argument("--height", type=_positive_int, default=800)
    p.add_argument("--margin", type=float, default=0.05)
    p.add_argument("--layers", default=None, help="comma-separated subset of " + ",".join(render.LAYERS))
    p.set_defaults(func=cmd_svg)

    p = sub.add_parser("check", help="run the invariant checks on one spec")
    axes(p)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler: Callable[[argparse.Namespace], int] = args.func
    if getattr(args, "samples", 16) < 16:
        sys.stderr.write("eightoval: error: --samples must be at least 16\n")
        return EXIT_INPUT
    try:
        return handler(args)
    except InputError as exc:
        sys.stderr.write(f"eightoval: error: {exc}\n")
        return EXIT_INPUT
    except OvalError as exc:
        sys.stderr.write(f"eightoval: error: {exc}\n")
        return EXIT_INPUT
    except OSError as exc:
        sys.stderr.write(f"eightoval: error: {exc}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
