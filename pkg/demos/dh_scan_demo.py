#!/usr/bin/env python3
"""Scan the first hundred index levels of the Davenport-Heilbronn function.

The function satisfies a zeta-like functional equation yet violates the
analogue of the Riemann hypothesis: its index staircase skips the levels
44 and 45, flanking a pair of off-critical-line zeros near t = 85.7.
"""

from lzeros.lfunctions import dh_family
from lzeros.numerics import PrecisionPolicy
from lzeros.solver import GapReport, scan_gaps


def main():
    results = scan_gaps(dh_family(), range(1, 101),
                        PrecisionPolicy.for_digits(15))
    for r in results:
        if isinstance(r, GapReport):
            print(f"n={r.n:3d}  GAP  interval=({r.interval[0]:.4f}, "
                  f"{r.interval[1]:.4f})  S-jump={r.jump:+.3f}")
        else:
            print(f"n={r.n:3d}  t={r.ordinate_str}")


if __name__ == "__main__":
    main()
