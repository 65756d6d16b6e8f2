"""Maximum relative perimeter error over a, b in [1, 10] for several grid
steps, plus the same sweep extended to flatter ellipses."""

import argparse
from pathlib import Path

from eightoval.analysis import sweep


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--steps", type=float, nargs="+", default=[1.0, 0.5, 0.25, 0.1])
    parser.add_argument("--upper", type=float, default=10.0)
    parser.add_argument("--csv-dir", type=Path, default=None)
    args = parser.parse_args()

    for step in args.steps:
        grid = sweep((1.0, args.upper), (1.0, args.upper), step)
        a, b = grid.argmax_cell
        print(f"step {step:<6g} cells {len(grid.cells):6d}  max {100 * grid.max_err:.6f} %  at a={a:g}, b={b:g}")
        if args.csv_dir is not None:
            args.csv_dir.mkdir(parents=True, exist_ok=True)
            (args.csv_dir / f"sweep_step_{step:g}.csv").write_text(grid.to_csv())


if __name__ == "__main__":
    main()
