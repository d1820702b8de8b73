"""Command-line interface: solve, count, gue, primes, scan.

Exit codes: 0 success, 1 runtime error, 2 at least one gap detected,
64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from mpmath import mp

from . import analysis, solver
from .cache import ZeroCache
from .characters import build_character, build_character_from_values, \
    parse_character_file
from .lfunctions import (
    LFunctionFamily,
    dh_family,
    dirichlet_family,
    ramanujan_family,
    zeta_family,
)
from .numerics import PrecisionPolicy

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_GAP = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


class UsageError(ValueError):
    pass


def _parse_range(text: str, cast=int):
    """'a:b' -> (a, b); a single value maps to (a, a)."""
    if ":" in text:
        a, b = text.split(":", 1)
        return cast(a), cast(b)
    v = cast(text)
    return v, v


def make_family(args) -> LFunctionFamily:
    name = args.family
    if name == "zeta":
        return zeta_family()
    if name == "dirichlet-values":
        if not args.values:
            raise UsageError("dirichlet-values needs --values FILE")
        k, values = parse_character_file(open(args.values).read())
        return dirichlet_family(build_character_from_values(k, values))
    if name == "dirichlet":
        if args.k is None or args.j is None:
            raise UsageError("dirichlet needs --k and --j (or --values FILE)")
        return dirichlet_family(build_character(args.k, args.j))
    if name == "ramanujan":
        return ramanujan_family(args.coeffs)
    if name == "dh":
        return dh_family()
    raise UsageError(f"unknown family {name!r}")


def make_policy(args) -> PrecisionPolicy:
    overrides = {
        "initial_delta": args.delta0,
        "delta_shrink": args.shrink,
        "initial_digits": args.digits0,
        "digits_increment": args.digits_step,
        "target_residual": args.residual,
    }
    overrides = {k: v for k, v in overrides.items() if v is not None}
    return PrecisionPolicy.for_digits(args.digits, **overrides)


def _add_family_args(p):
    p.add_argument("family", choices=["zeta", "dirichlet", "dirichlet-values",
                                      "ramanujan", "dh"])
    p.add_argument("--k", type=int, help="Dirichlet modulus")
    p.add_argument("--j", type=int, help="Dirichlet character index")
    p.add_argument("--values", help="character value table file (n,value lines)")
    p.add_argument("--coeffs", type=int, default=1200,
                   help="modular coefficient cutoff")


def _add_policy_args(p):
    p.add_argument("--digits", type=int, default=30,
                   help="certified decimal digits (>= 10)")
    p.add_argument("--mode", choices=["exact", "asymptotic"], default="exact")
    p.add_argument("--delta0", type=float)
    p.add_argument("--shrink", type=float)
    p.add_argument("--digits0", type=int)
    p.add_argument("--digits-step", type=int, dest="digits_step")
    p.add_argument("--residual", type=float)
    p.add_argument("--cache", help="cache directory (default $LZEROS_CACHE_DIR)")
    p.add_argument("--no-solve", action="store_true",
                   help="fail on cache miss instead of solving")
    p.add_argument("--workers", type=int, default=1)


def build_parser() -> _Parser:
    parser = _Parser(prog="lzeros",
                     description="Zeros of L-functions from their "
                                 "transcendental equations")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve for the n-th zero(s)")
    _add_family_args(p)
    p.add_argument("--n", required=True, help="index or range a:b")
    _add_policy_args(p)
    p.add_argument("--format", choices=["table", "csv", "json"],
                   default="table")

    p = sub.add_parser("count", help="staircase of counting formulas")
    _add_family_args(p)
    p.add_argument("--T", required=True, help="height range a:b")
    p.add_argument("--step", type=float, default=0.5)
    p.add_argument("--precision", type=int, default=20)

    p = sub.add_parser("gue", help="pair-correlation histogram (CSV)")
    _add_family_args(p)
    p.add_argument("--M", type=int, default=1)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--bin", type=float, default=0.05)
    p.add_argument("--range", default="0:3")
    p.add_argument("--cache")
    p.add_argument("--no-solve", action="store_true")

    p = sub.add_parser("primes", help="prime counting from zeros (CSV)")
    _add_family_args(p)
    p.add_argument("--zeros", type=int, default=50)
    p.add_argument("--x", default="2:30")
    p.add_argument("--step", type=float, default=1.0)
    p.add_argument("--cache")
    p.add_argument("--no-solve", action="store_true")

    p = sub.add_parser("scan", help="solve a range, reporting gaps")
    _add_family_args(p)
    p.add_argument("--n", required=True, help="index range a:b")
    _add_policy_args(p)
    return parser


# ---------------------------------------------------------------------------
# solve
# ---------------------------------------------------------------------------

def _solve_one(family, n, policy, mode):
    return solver.solve_zero(family, n, policy, mode)


def _rounded(ordinate_str: str, digits: int) -> str:
    with mp.workdps(len(ordinate_str) + 10):
        t = mp.mpf(ordinate_str)
        intlen = len(str(int(abs(t)))) if abs(t) >= 1 else 1
        return mp.nstr(t, digits + intlen, strip_zeros=False)


def cmd_solve(args) -> int:
    family = make_family(args)
    policy = make_policy(args)
    n_lo, n_hi = _parse_range(args.n)
    cache = ZeroCache(args.cache)
    rows = []
    gaps = []
    todo = []
    for n in range(n_lo, n_hi + 1):
        hit = cache.get(family.family_id, n, args.mode, args.digits)
        if hit is not None:
            rows.append((n, _rounded(hit.ordinate_str, args.digits),
                         args.digits, hit.residual))
        else:
            if args.no_solve:
                print(f"cache miss for n={n} with --no-solve", file=sys.stderr)
                return EXIT_ERROR
            todo.append(n)
    results = {}
    if todo:
        if args.workers > 1:
            with ProcessPoolExecutor(max_workers=args.workers) as pool:
                futs = {n: pool.submit(_solve_one, family, n, policy,
                                       args.mode) for n in todo}
                for n, fut in futs.items():
                    try:
                        results[n] = fut.result()
                    except solver.GapDetected as exc:
                        gaps.append((n, exc))
        else:
            for n in todo:
                try:
                    results[n] = _solve_one(family, n, policy, args.mode)
                except solver.GapDetected as exc:
                    gaps.append((n, exc))
    for n, rec in results.items():
        cache.put_record(rec)
        rows.append((n, _rounded(rec.ordinate_str,
                                 min(args.digits, rec.achieved_digits)),
                     rec.achieved_digits, rec.residual))
    rows.sort(key=lambda r: r[0])
    _emit_solve(rows, family, args)
    for n, exc in sorted(gaps, key=lambda g: g[0]):
        print(f"gap: no solution for n={n} near "
              f"[{exc.bracket[0]:.6g}, {exc.bracket[1]:.6g}]")
    return EXIT_GAP if gaps else EXIT_OK


def _emit_solve(rows, family, args):
    if args.format == "csv":
        print("family_id,n,mode,digits,t_n,residual")
        for n, t, d, res in rows:
            print(f"{family.family_id},{n},{args.mode},{d},{t},{res:.6e}")
    elif args.format == "json":
        print(json.dumps([
            {"family_id": family.family_id, "n": n, "mode": args.mode,
             "digits": d, "t_n": t, "residual": res}
            for n, t, d, res in rows], indent=2))
    else:
        for n, t, d, res in rows:
            print(f"n={n:<8d} t={t}")


# ---------------------------------------------------------------------------
# count / gue / primes / scan
# ---------------------------------------------------------------------------

def cmd_count(args) -> int:
    family = make_family(args)
    t_lo, t_hi = _parse_range(args.T, float)
    points = []
    T = t_lo
    while T <= t_hi + 1e-12:
        if T > 0:
            points.append(solver.counting_point(family, T, args.precision))
        T += args.step
    sys.stdout.write(analysis.staircase_csv(points))
    return EXIT_OK


def _bulk_zeros(family, M, N, cache_dir, no_solve):
    """Asymptotic-mode ordinates t_M..t_{N+1} with a .npy cache."""
    import numpy as np
    from .cache import default_cache_dir
    from pathlib import Path
    directory = Path(cache_dir) if cache_dir else default_cache_dir()
    path = directory / f"bulk_{family.family_id}_{M}_{N + 1}.npy"
    if path.exists():
        return np.load(path)
    if no_solve:
        raise UsageError(f"no cached bulk zeros at {path} with --no-solve")
    zeros = solver.solve_bulk_asymptotic(family, M, N + 1)
    directory.mkdir(parents=True, exist_ok=True)
    np.save(path, zeros)
    return zeros


def cmd_gue(args) -> int:
    family = make_family(args)
    lo, hi = _parse_range(args.range, float)
    zeros = _bulk_zeros(family, args.M, args.N, args.cache, args.no_solve)
    bins = analysis.uniform_bins(lo, hi, args.bin)
    result = analysis.pair_correlation(zeros, args.M, args.N, bins)
    sys.stdout.write(analysis.pair_correlation_csv(result))
    return EXIT_OK


def cmd_primes(args) -> int:
    family = make_family(args)
    x_lo, x_hi = _parse_range(args.x, float)
    zeros = _bulk_zeros(family, 1, args.zeros, args.cache, args.no_solve)
    zeros = zeros[: args.zeros]
    tables = analysis.ArithmeticTables.up_to(int(x_hi) + 1)
    rows = []
    x = x_lo + 0.5
    while x <= x_hi + 1e-12:
        rows.append((x, analysis.pi_from_zeros(x, zeros, 20), tables.pi(x)))
        x += args.step
    sys.stdout.write(analysis.prime_count_csv(rows))
    return EXIT_OK


def cmd_scan(args) -> int:
    family = make_family(args)
    policy = make_policy(args)
    n_lo, n_hi = _parse_range(args.n)
    results = solver.scan_gaps(family, range(n_lo, n_hi + 1), policy,
                               args.mode)
    found_gap = False
    for r in results:
        if isinstance(r, solver.GapReport):
            found_gap = True
            print(f"n={r.n:<8d} GAP interval=[{r.interval[0]:.6f}, "
                  f"{r.interval[1]:.6f}] wrap={r.wrap:.6f} "
                  f"jump={r.jump:.4f}")
        else:
            print(f"n={r.n:<8d} t={r.ordinate_str}")
    return EXIT_GAP if found_gap else EXIT_OK


COMMANDS = {
    "solve": cmd_solve,
    "count": cmd_count,
    "gue": cmd_gue,
    "primes": cmd_primes,
    "scan": cmd_scan,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    if getattr(args, "digits", None) is not None and args.digits < 10:
        print("--digits must be >= 10", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # runtime failures map to exit code 1
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
