"""Write the construction and overlay figures for a few ellipses."""

import argparse
from pathlib import Path

from eightoval.oval import EllipseSpec, construct
from eightoval.render import render_construction, render_overlay

CASES = [(94.0, 78.0), (2.0, 1.0), (10.0, 3.0)]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("outdir", type=Path, nargs="?", default=Path("figures"))
    args = parser.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    for a, b in CASES:
        spec = EllipseSpec(a, b)
        stem = f"{a:g}_{b:g}"
        (args.outdir / f"construction_{stem}.svg").write_text(render_construction(construct(spec)))
        (args.outdir / f"overlay_{stem}.svg").write_text(render_overlay(spec))
        print(f"wrote {stem}")


if __name__ == "__main__":
    main()
