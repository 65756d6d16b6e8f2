"""Oval construction and perimeter comparison for the Flavian amphitheatre
(semi-axes 94 m and 78 m)."""

import math

from eightoval import compare, construct, eccentricity
from eightoval.analysis import radial_deviation
from eightoval.oval import EllipseSpec


def main():
    spec = EllipseSpec(94.0, 78.0)
    c = construct(spec)
    print(f"eccentricity        {eccentricity(spec).epsilon:.4f}")
    for name, radius, angle in (("major", c.R, c.gamma), ("intermediate", c.p, c.beta), ("minor", c.r, c.delta)):
        print(f"{name:<13} radius {radius:10.6f}  angle {angle:.9f} rad  {math.degrees(angle):9.5f} deg")
    rep = compare(spec)
    print(f"O(94, 78)           {rep.oval:.6f}")
    print(f"L(94, 78)           {rep.elliptic:.6f}")
    print(f"Kepler              {rep.kepler:.6f}")
    print(f"relative error      {100 * rep.rel_err_oval:.3e} %")
    dev = radial_deviation(spec, 4096)
    print(f"max radial gap      {dev.max_radial_dev:.4f} m at {math.degrees(dev.argmax_angle):.2f} deg")


if __name__ == "__main__":
    main()
