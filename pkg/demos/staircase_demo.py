#!/usr/bin/env python3
"""Emit counting-staircase CSV data for zeta, a Dirichlet character and the
Ramanujan modular L-function.

Writes three files next to this script: the exact counting formulas sampled
on a grid, suitable for plotting against the actual zero ordinates.
"""

from pathlib import Path

from lzeros.analysis import staircase_csv
from lzeros.characters import build_character
from lzeros.lfunctions import dirichlet_family, ramanujan_family, zeta_family
from lzeros.solver import counting_point


def sample(family, lo, hi, step):
    points = []
    t = lo
    while t <= hi + 1e-9:
        points.append(counting_point(family, t, P=20))
        t += step
    return points


def main():
    out = Path(__file__).parent
    jobs = [
        ("staircase_zeta.csv", zeta_family(), 2.0, 60.0, 0.25),
        ("staircase_dirichlet_7_2.csv",
         dirichlet_family(build_character(7, 2)), 0.5, 30.0, 0.25),
        ("staircase_ramanujan.csv", ramanujan_family(400), 2.0, 35.0, 0.25),
    ]
    for name, family, lo, hi, step in jobs:
        path = out / name
        path.write_text(staircase_csv(sample(family, lo, hi, step)))
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
