#!/usr/bin/env python3
"""Pair-correlation histogram of the first 10^4 zeta zeros vs. the GUE
kernel 1 - sin^2(pi u)/(pi u)^2, as CSV."""

from pathlib import Path

from lzeros.analysis import pair_correlation, pair_correlation_csv, \
    uniform_bins
from lzeros.lfunctions import zeta_family
from lzeros.solver import solve_bulk_asymptotic


def main(n_zeros: int = 10**4):
    zeros = solve_bulk_asymptotic(zeta_family(), 1, n_zeros + 1)
    bins = uniform_bins(0.0, 3.0, 0.05)
    csv = pair_correlation_csv(pair_correlation(zeros, 1, n_zeros, bins))
    path = Path(__file__).parent / "gue_pair_correlation.csv"
    path.write_text(csv)
    print(f"wrote {path} ({n_zeros} zeros)")


if __name__ == "__main__":
    main()
