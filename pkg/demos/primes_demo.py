#!/usr/bin/env python3
"""Reconstruct pi(x) on [2, 30] from the first 50 zeta zeros via the
explicit formula and compare with the sieve, as CSV."""

from pathlib import Path

from lzeros.analysis import ArithmeticTables, pi_from_zeros, prime_count_csv
from lzeros.lfunctions import zeta_family
from lzeros.solver import solve_bulk_asymptotic


def main():
    zeros = solve_bulk_asymptotic(zeta_family(), 1, 51)
    tables = ArithmeticTables.up_to(64)
    rows = []
    x = 2.5
    while x <= 30.5:
        rows.append((x, pi_from_zeros(x, zeros, 25), tables.pi(x)))
        x += 0.25
    path = Path(__file__).parent / "prime_counting.csv"
    path.write_text(prime_count_csv(rows))
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
