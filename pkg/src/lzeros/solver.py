"""Seeds, transcendental-equation index, the solve loop, counting and gaps.

For each family the n-th zero on the critical line is the unique solution
of ``index(t) = n`` where ``index`` combines the continuous Gamma-factor
phase theta with the principal-branch argument of the L-function slightly
off the line (sigma = sigma_c + delta, delta -> 0+).  A Lambert-W closed
form inverts the smooth part of the equation and provides the seed; the
solve loop then shrinks delta while raising the working precision until
the residual |L| at the candidate certifies the requested digits.

Off-critical-line zeros (Davenport-Heilbronn) make the index jump by 2
without attaining the skipped integer levels; the root finder then either
finds no sign change or lands on the discontinuity with a large equation
residual, and both signals are reported as a detected gap.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from mpmath import fp, mp, mpc, mpf

from .lfunctions import LFunctionFamily
from .numerics import (
    GUARD_DIGITS,
    DomainError,
    NoSignChangeError,
    NonConvergenceError,
    PrecisionPolicy,
    find_root,
    lambert_w0,
)
from .specialfn import theta, theta_asymptotic

# Above this ordinate the principal branch of arg L is no longer known to
# match the delta -> 0+ limit everywhere; results still compute but carry a
# warning (empirically safe up to roughly the 10^9-th zeta zero).
PRINCIPAL_ARG_WARN_HEIGHT = 2.6e8


class GapDetected(ArithmeticError):
    """No solution of the index equation for this n (off-line zero signature)."""

    def __init__(self, family_id, n, bracket, message=None):
        super().__init__(message or
                         f"{family_id}: no solution for n = {n} "
                         f"in [{float(bracket[0]):.6g}, {float(bracket[1]):.6g}]")
        self.family_id = family_id
        self.n = n
        self.bracket = bracket


@dataclass(frozen=True)
class GapReport:
    """A missing index n with the unresolved interval and the measured jump.

    ``interval`` spans the two converged neighboring zeros (the region where
    the delta -> 0+ limit of arg L fails somewhere inside); ``wrap`` is the
    refined location of the index discontinuity itself, and ``jump`` the
    index change measured across it (2 per off-critical-line pair)."""

    family_id: str
    n: int
    interval: tuple
    wrap: float
    jump: float


@dataclass(frozen=True)
class ZeroRecord:
    family_id: str
    n: int
    seed: float
    ordinate: object            # mpf at final working precision
    ordinate_str: str           # full-precision decimal text
    achieved_digits: int
    residual: float
    mode: str                   # 'exact' | 'asymptotic'
    iterations: int


@dataclass(frozen=True)
class CountingPoint:
    T: float
    n_critical: float
    n_strip: float
    s_term: float


# ---------------------------------------------------------------------------
# Seeds
# ---------------------------------------------------------------------------

def seed(family: LFunctionFamily, n: int, P: int = 30):
    """Closed-form Lambert-W approximation t~_n; no root finding involved."""
    kind = family.kind
    with mp.workdps(P + GUARD_DIGITS):
        if kind == "zeta":
            if n < 1:
                raise DomainError("zeta zeros are labeled n >= 1")
            A = mpf(n) - mpf(11) / 8
            return +(2 * mp.pi * A / lambert_w0(A / mp.e, P))
        if kind == "dh":
            if n < 1:
                raise DomainError("index must satisfy n >= 1")
            A = mpf(n) - mpf(5) / 8
            return +(2 * mp.pi * A / lambert_w0(5 * A / mp.e, P))
        if kind == "modular":
            if n < 1:
                raise DomainError("index must satisfy n >= 1")
            k = family.weight
            A = mpf(n) - mpf(k + (-1) ** (k // 2)) / 4
            # lambert_w0 raises DomainError below the branch point (e.g. the
            # first zero of the weight-12 family).
            return +(A * mp.pi / lambert_w0(A / (2 * mp.e), P))
        # Dirichlet: one formula for the whole label line n in Z.
        chi = family.character
        sig = 1 if n > 0 else -1
        arg_g = mp.arg(_gauss(family, P))
        A = (sig * (n + arg_g / (2 * mp.pi))
             + mpf(1 - 4 * sig - 2 * chi.order_a * (sig + 1)) / 8)
        w_arg = chi.modulus * A / mp.e
        return +(2 * mp.pi * sig * A / lambert_w0(w_arg, P))


def _gauss(family, P):
    from .characters import gauss_sum
    return gauss_sum(family.character, P)


def _smooth_seed(family, n, P: int = 20):
    """Seed from the exact smooth equation theta(t)/pi + c = n, used when the
    Lambert-W argument falls below the branch point (small modular n)."""
    kind = family.theta_kind
    c = _index_offset(family, P)
    lo = mpf("0.05")
    try:
        hi = seed(family, n + 1, P)
    except DomainError:
        hi = mpf(4 * (n + 2))
    return find_root(lambda t: theta(kind, t, P) / mp.pi + c - n,
                     (lo, hi), P=min(P, 15))


# ---------------------------------------------------------------------------
# The equation index
# ---------------------------------------------------------------------------

def _index_offset(family, P):
    """Constant completing theta/pi + arg L/pi to the integer-crossing index."""
    if family.kind == "zeta":
        return mpf(3) / 2
    if family.kind == "dirichlet":
        chi = family.character
        return (mpf(1) / 2 + mpf(chi.order_a) / 4
                - mp.arg(_gauss(family, P)) / (2 * mp.pi))
    if family.kind == "modular":
        return mpf(1 + (-1) ** (family.weight // 2)) / 4
    return mpf(1) / 2  # Davenport-Heilbronn


def equation_lhs(family: LFunctionFamily, t, delta=0.0, mode: str = "exact",
                 P: int = 30):
    """The index function whose crossing of the integer n locates the n-th zero.

    index(t) = theta(t)/pi + arg L(sigma_c + delta + i t)/pi + offset,
    with theta exact or asymptotic according to ``mode``.  Monotone
    increasing in t wherever the delta -> 0+ limit of arg L exists.
    """
    if mode not in ("exact", "asymptotic"):
        raise ValueError(f"unknown mode {mode!r}")
    with mp.workdps(P + GUARD_DIGITS):
        t = mpf(t)
        if abs(t) > PRINCIPAL_ARG_WARN_HEIGHT:
            warnings.warn(
                "principal-branch arg L is unverified at this height; "
                "the index may be off by an integer", stacklevel=2)
        kind = family.theta_kind
        th = (theta(kind, t, P) if mode == "exact"
              else theta_asymptotic(kind, t, P))
        s = mpc(mpf(family.critical_sigma.numerator)
                / family.critical_sigma.denominator + mpf(delta), t)
        arg_l = mp.arg(family.eval(s, P))
        return +(th / mp.pi + arg_l / mp.pi + _index_offset(family, P))


def _theta_slope(family, t, P):
    """d theta/dt from the asymptotic form (ample for step-size control)."""
    kind = family.theta_kind
    with mp.workdps(P + GUARD_DIGITS):
        u = max(abs(mpf(t)), mpf(4))
        if kind.variant == "modular":
            return mp.log(u / (2 * mp.pi))
        return mp.log(kind.k * u / (2 * mp.pi)) / 2


def _fast_round(family, n, t, delta, digits, mode):
    """Model-based polish: invert arctan((t - t_z)/delta)/pi + theta'/pi drift.

    Two or three L-evaluations bring t within the delta-bias of the round's
    root.  Returns None when the local model is invalid (near an index
    discontinuity or outside the zero's basin), signalling a fallback to the
    bracketed finder.
    """
    with mp.workdps(digits + GUARD_DIGITS):
        delta = mpf(delta)
        c = _theta_slope(family, t, digits)
        for _ in range(3):
            g0 = equation_lhs(family, t, delta, mode, digits) - n
            if abs(g0) >= mpf("0.495"):
                return None
            # Solve arctan(u/delta) + c*u = pi*g0 for the offset u.
            target = mp.pi * g0
            u = target / c if abs(target) > mpf("1.45") else delta * mp.tan(target)
            for _ in range(40):
                f = mp.atan(u / delta) + c * u - target
                fp_ = delta / (delta ** 2 + u ** 2) + c
                du = f / fp_
                u -= du
                if abs(du) <= abs(u) * mpf(10) ** (-digits) + mpf(10) ** (-2 * digits):
                    break
            t = t - u
            if abs(u) < delta * delta / 100:
                break
        return +t


def _mean_spacing(family, t):
    """Local average gap between consecutive zeros, pi / theta'(t)."""
    kind = family.theta_kind
    u = max(abs(float(t)), 4.0)
    if kind.variant == "modular":
        slope = fp.log(u / (2 * fp.pi))
    else:
        slope = 0.5 * fp.log(kind.k * u / (2 * fp.pi))
    slope = max(slope, 0.05)
    return fp.pi / slope


# ---------------------------------------------------------------------------
# The solve loop
# ---------------------------------------------------------------------------

def _neighbor_cap(family, n, t0, P):
    """Maximal half-width: midpoint distance to the neighboring seeds."""
    gaps = []
    for m in (n - 1, n + 1):
        if family.kind != "dirichlet" and m < 1:
            continue
        try:
            tm = seed(family, m, P)
        except DomainError:
            continue
        gaps.append(abs(float(tm) - float(t0)) / 2)
    if not gaps:
        return 2.5 * _mean_spacing(family, t0)
    return max(min(gaps), 0.25 * _mean_spacing(family, t0))


def solve_zero(family: LFunctionFamily, n: int,
               policy: PrecisionPolicy | None = None,
               mode: str = "exact") -> ZeroRecord:
    """Polish the seed into the n-th zero at the policy's precision target.

    Raises GapDetected when the index equation has no solution for this n
    (the off-critical-line signature) and NonConvergenceError if the
    schedule is exhausted.
    """
    if policy is None:
        policy = PrecisionPolicy()
    try:
        t0 = seed(family, n)
    except DomainError:
        if family.kind != "modular":
            raise
        t0 = _smooth_seed(family, n)
    seed_value = float(t0)
    h_max = _neighbor_cap(family, n, t0, 20)
    if family.kind != "dh":
        # The index is monotone for these families, so widening past the
        # neighboring seeds is safe; high seeds can be off by ~S(t) spacings.
        h_max = max(h_max, 2.2 * _mean_spacing(family, t0))
    h0 = min(0.45 * _mean_spacing(family, t0), 2.0, h_max)

    sigma = mpf(family.critical_sigma.numerator) / family.critical_sigma.denominator
    t_cur = mpf(t0)
    prev_delta = None
    prev_digits = None
    residual = None
    iterations = 0
    for i, delta, digits in policy.schedule():
        iterations = i + 1
        with mp.workdps(digits + GUARD_DIGITS):
            t_cur = +t_cur

            def g(t, _d=delta, _P=digits):
                return equation_lhs(family, t, _d, mode, _P) - n

            if i == 0:
                t_root = _first_bracket_solve(family, n, g, t_cur, h0, h_max,
                                              digits, delta)
            else:
                t_root = _fast_round(family, n, t_cur, delta, digits, mode)
                used_fast = t_root is not None
                if t_root is None:
                    # Empirically the previous round's error is ~0.3 delta^2,
                    # so a bracket a few hundred delta^2 wide already contains
                    # the root; widen when it does not.
                    h = max(500 * prev_delta ** 2,
                            abs(t_cur) * mpf(10) ** (-(prev_digits - 3)))
                    xtol = max(delta * delta / 10, mpf(10) ** (-(digits + 5)))
                    while t_root is None:
                        try:
                            t_root = find_root(g, (t_cur - h, t_cur + h),
                                               P=digits,
                                               tol=mpf(10) ** (-(digits + 10)),
                                               xtol=xtol)
                        except NoSignChangeError:
                            h *= 64
                            if h > max(h0, 4 * prev_delta):
                                t_root = _first_bracket_solve(
                                    family, n, g, t_cur, h0, h_max, digits,
                                    delta)
            # A large index mismatch at the solution means the finder
            # converged onto a discontinuity, not a crossing (the fast path
            # already verified this internally).
            if i == 0 or not used_fast:
                miss = abs(g(t_root))
                if miss > mpf("0.25"):
                    if family.kind != "dh":
                        # Principal-branch wrap of arg L between close zeros
                        # (|S| > 1): recover by solving at a larger delta,
                        # where the branch stays principal, then walking
                        # delta back down through the local model.
                        t_root = _wrap_tolerant_solve(
                            family, n, t_cur, h0, h_max, digits, delta, mode)
                    else:
                        raise GapDetected(
                            family.family_id, n,
                            (float(t_root) - 1e-3, float(t_root) + 1e-3))
            # Convergence onto an index discontinuity instead of a zero: the
            # iterates settle but |L| stalls at an O(1) value.
            if family.kind == "dh" and i >= 1 and mode == "exact":
                stall = abs(family.eval(mpc(sigma, t_root), 15))
                if stall > mpf("0.01"):
                    raise GapDetected(
                        family.family_id, n,
                        (float(t_root) - 1e-3, float(t_root) + 1e-3))

            step = abs(t_root - t_cur)
            t_cur = t_root
            # The residual cannot reach the target while the delta bias
            # (~0.3 delta^2) still dominates, so skip the check until then.
            reachable = delta * delta < mpf(policy.target_residual) * 1e4
            if mode == "exact":
                if reachable:
                    residual = abs(family.eval(mpc(sigma, t_cur), digits))
                    if residual < policy.target_residual:
                        achieved = _certified_digits(family, sigma, t_cur,
                                                     residual, digits)
                        return _record(family, n, seed_value, t_cur, achieved,
                                       residual, mode, iterations, digits)
            else:
                if i > 0 and step < mpf(policy.target_residual):
                    residual = abs(family.eval(mpc(sigma, t_cur), digits))
                    achieved = min(int(mp.floor(-mp.log10(step))) if step > 0
                                   else digits, digits - 2)
                    return _record(family, n, seed_value, t_cur, achieved,
                                   residual, mode, iterations, digits)
            prev_delta = delta
            prev_digits = digits
    raise NonConvergenceError(
        f"{family.family_id} n={n}: target not reached after "
        f"{iterations} iterations"
        + (f" (residual {float(residual):.3g})" if residual is not None else ""))


def _wrap_tolerant_solve(family, n, t0, h0, h_max, digits, delta, mode):
    """First-round rescue for zeros whose principal-branch arg wraps.

    A large enough delta keeps arg L principal across the whole bracket;
    the root found there is then tracked while delta is stepped back down,
    staying inside the arctan transition at every step.
    """
    last_err = None
    for big in (mpf("0.02"), mpf("0.1"), mpf("0.3")):
        if big <= mpf(delta):
            continue

        def g_big(t, _d=big, _P=digits):
            return equation_lhs(family, t, _d, mode, _P) - n

        try:
            t = _first_bracket_solve(family, n, g_big, t0, h0, h_max,
                                     digits, big)
        except GapDetected as exc:
            last_err = exc
            continue
        if abs(g_big(t)) > mpf("0.25"):
            continue
        d = big
        ok = True
        while d > mpf(delta):
            d = max(d / 10, mpf(delta))
            t_next = _fast_round(family, n, t, d, digits, mode)
            if t_next is None:
                ok = False
                break
            t = t_next
        if ok:
            return t
    raise GapDetected(family.family_id, n,
                      (float(t0) - float(h_max), float(t0) + float(h_max))) \
        from last_err


def _first_bracket_solve(family, n, g, t0, h0, h_max, digits, delta):
    """Root-find with a geometrically widening bracket around the seed."""
    h = mpf(h0)
    last_err = None
    while True:
        lo, hi = t0 - h, t0 + h
        if family.kind != "dirichlet" or n > 0:
            lo = max(lo, mpf("1e-3")) if family.kind != "dirichlet" else lo
        try:
            return find_root(g, (lo, hi), P=digits,
                             tol=mpf(10) ** (-(digits + 10)),
                             xtol=max(delta * delta / 10,
                                      mpf(10) ** (-(digits + 5))))
        except NoSignChangeError as exc:
            last_err = exc
            if h >= h_max:
                raise GapDetected(family.family_id, n,
                                  (float(lo), float(hi))) from last_err
            h = min(h * 2, mpf(h_max))


def _certified_digits(family, sigma, t, residual, digits):
    """Decimals certified by residual / |dL/dt| at the zero."""
    with mp.workdps(digits + GUARD_DIGITS):
        h = mpf(10) ** (-digits // 3)
        slope = abs(family.eval(mpc(sigma, t + h), digits)
                    - family.eval(mpc(sigma, t - h), digits)) / (2 * h)
        if slope == 0 or residual == 0:
            return digits - 3
        err = residual / slope
        return max(0, min(int(mp.floor(-mp.log10(err))) - 1, digits - 3))


def _record(family, n, seed_value, t, achieved, residual, mode, iterations,
            digits):
    with mp.workdps(digits + GUARD_DIGITS):
        return ZeroRecord(
            family_id=family.family_id,
            n=n,
            seed=seed_value,
            ordinate=+t,
            ordinate_str=mp.nstr(t, achieved + len(str(int(abs(t)) or 1)) + 2,
                                 strip_zeros=False),
            achieved_digits=achieved,
            residual=float(residual),
            mode=mode,
            iterations=iterations,
        )


# ---------------------------------------------------------------------------
# Counting formulas
# ---------------------------------------------------------------------------

def count_critical(family: LFunctionFamily, T, side: str = "upper",
                   P: int = 30):
    """Number of critical-line zeros with ordinate in (0, T) (or (-T, 0) for
    side='lower', Dirichlet only); near-integer when T is between zeros."""
    if side not in ("upper", "lower"):
        raise ValueError("side must be 'upper' or 'lower'")
    with mp.workdps(P + GUARD_DIGITS):
        T = mpf(T)
        if T <= 0:
            raise DomainError("T must be positive")
        if side == "lower":
            if family.kind != "dirichlet":
                raise DomainError(
                    "lower-line counting only differs for Dirichlet families")
            chi = family.character
            kind = family.theta_kind
            s = mpc(mpf(1) / 2, -T)
            arg_l = mp.arg(family.eval(s, P))
            return +(theta(kind, T, P) / mp.pi - arg_l / mp.pi
                     + mp.arg(_gauss(family, P)) / (2 * mp.pi)
                     - mpf(chi.order_a) / 4)
        return +(equation_lhs(family, T, 0.0, "exact", P) - mpf(1) / 2)


def count_strip(family: LFunctionFamily, T, P: int = 30):
    """Number of zeros in the whole critical strip with 0 < Im(s) < T.

    For zeta this is the classical theta/pi + 1 + S(T) count; for Dirichlet
    the arg-G constant is traded for arg L(1/2) via the reality of xi on the
    line.  Modular and DH families reuse the critical-line formula (for DH
    the principal-branch arg then jumps by 2 at off-line pairs, which is
    exactly the gap signature rather than a true strip count there).
    """
    with mp.workdps(P + GUARD_DIGITS):
        T = mpf(T)
        if T <= 0:
            raise DomainError("T must be positive")
        if family.kind == "dirichlet":
            kind = family.theta_kind
            arg_l = mp.arg(family.eval(mpc(mpf(1) / 2, T), P))
            arg_l0 = mp.arg(family.eval(mpc(mpf(1) / 2, 0), P))
            return +(theta(kind, T, P) / mp.pi + arg_l / mp.pi - arg_l0 / mp.pi)
        return count_critical(family, T, "upper", P)


def counting_point(family: LFunctionFamily, T, P: int = 30) -> CountingPoint:
    with mp.workdps(P + GUARD_DIGITS):
        sigma = (mpf(family.critical_sigma.numerator)
                 / family.critical_sigma.denominator)
        s_term = mp.arg(family.eval(mpc(sigma, mpf(T)), P)) / mp.pi
        return CountingPoint(
            T=float(T),
            n_critical=float(count_critical(family, T, "upper", P)),
            n_strip=float(count_strip(family, T, P)),
            s_term=float(s_term),
        )


# ---------------------------------------------------------------------------
# Gap scanning
# ---------------------------------------------------------------------------

def scan_gaps(family: LFunctionFamily, n_range, policy=None, mode="exact"):
    """Solve every n in the contiguous range; failures become gap reports.

    Returns a list (ordered by n) whose entries are ZeroRecord for converged
    indices and GapReport for missing ones.  Each gap report brackets the
    index discontinuity and measures the jump Delta S across it.
    """
    ns = list(n_range)
    if ns != list(range(ns[0], ns[-1] + 1)):
        raise ValueError("n_range must be contiguous")
    records = {}
    missing = []
    for n in ns:
        try:
            records[n] = solve_zero(family, n, policy, mode)
        except GapDetected as exc:
            missing.append((n, exc))
    out = []
    reports = {}
    for run in _runs(sorted(n for n, _ in missing)):
        reports.update(_refine_gap(family, run, records))
    for n in ns:
        out.append(records.get(n) or reports[n])
    return out


def _runs(ns):
    runs, cur = [], []
    for n in ns:
        if cur and n != cur[-1] + 1:
            runs.append(cur)
            cur = []
        cur.append(n)
    if cur:
        runs.append(cur)
    return runs


def _refine_gap(family, run, records, P: int = 20):
    """Bisect the jump location between the converged neighbors of a gap run
    and measure the index jump across it."""
    n_lo, n_hi = run[0], run[-1]
    lo_rec = records.get(n_lo - 1)
    hi_rec = records.get(n_hi + 1)
    t_lo = mpf(lo_rec.ordinate) if lo_rec else mpf(
        solve_zero(family, n_lo - 1).ordinate)
    t_hi = mpf(hi_rec.ordinate) if hi_rec else mpf(
        solve_zero(family, n_hi + 1).ordinate)
    delta = 1e-6
    level = mpf(n_lo + n_hi) / 2
    with mp.workdps(P + GUARD_DIGITS):
        a, b = t_lo + mpf("1e-6"), t_hi - mpf("1e-6")
        for _ in range(60):
            if b - a < mpf("1e-5"):
                break
            m = (a + b) / 2
            if equation_lhs(family, m, delta, "exact", P) < level:
                a = m
            else:
                b = m
        eps = mpf("0.005")
        jump = float(equation_lhs(family, b + eps, delta, "exact", P)
                     - equation_lhs(family, a - eps, delta, "exact", P))
        wrap = float((a + b) / 2)
        interval = (float(t_lo), float(t_hi))
    return {n: GapReport(family.family_id, n, interval, wrap, jump)
            for n in run}


# ---------------------------------------------------------------------------
# Bulk asymptotic solving (float64 fast path for statistics)
# ---------------------------------------------------------------------------

_EM_BERNOULLI = (1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30)


def _em_zeta_batch(ts, delta: float, n_terms: int):
    """zeta(1/2 + delta + i t) for an array of heights, by Euler-Maclaurin
    with ``n_terms`` leading terms and four tail corrections (float64)."""
    import numpy as np
    ts = np.asarray(ts, dtype=float)
    sigma = 0.5 + delta
    k = np.arange(1, n_terms, dtype=float)
    lnk = np.log(k)
    amp = k ** (-sigma)
    total = np.exp(-1j * np.outer(ts, lnk)) @ amp.astype(complex)
    s = sigma + 1j * ts
    N = float(n_terms)
    ninvs = np.exp(-s * np.log(N))
    total += ninvs * (0.5 + N / (s - 1))
    poch = s / N
    fact = 1.0
    for j, b2j in enumerate(_EM_BERNOULLI, start=1):
        fact *= (2 * j) * (2 * j - 1)
        total += ninvs * b2j / fact * poch
        poch = poch * (s + 2 * j - 1) * (s + 2 * j) / (N * N)
    return total


def _z_theta(ts):
    import numpy as np
    return 0.5 * ts * (np.log(ts / (2.0 * np.pi)) - 1.0) - np.pi / 8


def _z_em_batch(ts):
    """Re(e^{i theta(t)} zeta(1/2 + i t)) via Euler-Maclaurin, for an
    ascending float64 array; real with sign changes exactly at the
    critical-line zeros, so root location needs no branch bookkeeping.
    Accurate to ~1e-11 but costs O(t) terms per point."""
    import numpy as np
    ts = np.asarray(ts, dtype=float)
    out = np.empty(len(ts))
    for lo in range(0, len(ts), 256):
        sub = ts[lo:lo + 256]
        z = _em_zeta_batch(sub, 0.0, int(2.2 * sub[-1]) + 64)
        out[lo:lo + 256] = (np.exp(1j * _z_theta(sub)) * z).real
    return out


def _z_scan_batch(ts):
    """Same function as `_z_em_batch` but cheap and only ~1e-3 accurate
    above t = 200: the O(sqrt(t))-term main sum with the leading remainder
    correction.  Good enough to bracket sign changes between grid points
    where the function is well away from zero."""
    import numpy as np
    ts = np.asarray(ts, dtype=float)
    out = np.empty(len(ts))
    lo_mask = ts < 200.0
    if lo_mask.any():
        out[lo_mask] = _z_em_batch(ts[lo_mask])
    hi_all = ts[~lo_mask]
    if len(hi_all) == 0:
        return out
    totals = np.empty(len(hi_all))
    for blk in range(0, len(hi_all), 8192):
        hi = hi_all[blk:blk + 8192]
        x = np.sqrt(hi / (2.0 * np.pi))
        K = np.floor(x).astype(int)
        theta = _z_theta(hi)
        k = np.arange(1, int(K.max()) + 1, dtype=float)
        terms = np.cos(theta[:, None] - np.outer(hi, np.log(k))) / np.sqrt(k)
        total = 2.0 * np.sum(np.where(k[None, :] <= K[:, None], terms, 0.0),
                             axis=1)
        p = x - K
        psi = (np.cos(2.0 * np.pi * (p * p - p - 1.0 / 16))
               / np.cos(2.0 * np.pi * p))
        total += np.where(K % 2 == 0, -1.0, 1.0) * psi / np.sqrt(x)
        totals[blk:blk + 8192] = total
    out[~lo_mask] = totals
    return out


def solve_bulk_asymptotic(family: LFunctionFamily, n_lo: int, n_hi: int,
                          delta: float = 1e-6, xtol: float = 1e-9):
    """Ordinates t_n for n in [n_lo, n_hi] in float64, accurate to ~1e-8,
    built for statistics over many thousands of zeros.  Zeta only.

    This is the small-delta limit of the asymptotic equation, which pins
    each root to the corresponding critical-line zero; the zeros are found
    directly as sign changes of the rotated completed function on a grid
    of ~40 points per mean spacing (rescanned finer if a close pair could
    have slipped between grid points), then sharpened by vectorized
    bisection.  Indices are assigned by matching against the Lambert-W
    seeds, which are accurate to a fraction of the mean spacing.
    """
    if family.kind != "zeta":
        raise DomainError("bulk asymptotic mode is implemented for zeta")
    if n_lo < 1 or n_hi < n_lo:
        raise DomainError("need 1 <= n_lo <= n_hi")
    import numpy as np

    two_pi = 2.0 * np.pi
    start_n = max(1, n_lo - 2)
    ns = np.arange(start_n, n_hi + 1)
    A = ns - 11.0 / 8
    w = np.array([float(fp.lambertw(a / fp.e).real) for a in A])
    t0 = two_pi * A / w
    sp = np.pi / (0.5 * np.log(t0 / two_pi))
    t_start = max(10.0, t0[0] - 0.7 * sp[0])
    t_end = t0[-1] + 0.7 * sp[-1]

    for points_per_spacing in (40, 160):
        pieces = []
        t = t_start
        while t < t_end:
            h = np.pi / (0.5 * np.log(t / two_pi)) / points_per_spacing
            block = min(t + 4096 * h, t_end)
            pieces.append(np.arange(t, block, h))
            t = block
        grid = np.concatenate(pieces)
        zv = _z_scan_batch(grid)
        idx = np.nonzero(np.sign(zv[:-1]) * np.sign(zv[1:]) < 0)[0]
        if len(idx) == 0:
            continue
        mids = 0.5 * (grid[idx] + grid[idx + 1])
        n_first = start_n + int(np.argmin(np.abs(t0 - mids[0])))
        n_last = n_first + len(mids) - 1
        if n_first > n_lo or n_last < n_hi:
            continue
        lo = n_lo - n_first
        hi = lo + (n_hi - n_lo) + 1
        seeds = t0[n_lo - start_n:n_hi - start_n + 1]
        local_sp = sp[n_lo - start_n:n_hi - start_n + 1]
        if np.max(np.abs(mids[lo:hi] - seeds) / local_sp) > 1.5:
            continue
        a, b = grid[idx[lo:hi]].copy(), grid[idx[lo:hi] + 1].copy()
        h = b - a
        fa, fb = _z_em_batch(a), _z_em_batch(b)
        # The cheap scan can mislabel a sign right at a near-tangential
        # crossing; nudge those brackets outward once at full accuracy.
        bad = np.sign(fa) == np.sign(fb)
        if bad.any():
            a[bad] -= h[bad]
            b[bad] += h[bad]
            fa[bad] = _z_em_batch(a[bad])
            fb[bad] = _z_em_batch(b[bad])
            if (np.sign(fa) == np.sign(fb)).any():
                continue
        steps = max(8, int(np.ceil(np.log2(float(np.max(b - a)) / xtol))))
        for _ in range(steps):
            m = 0.5 * (a + b)
            fm = _z_em_batch(m)
            same = np.sign(fm) == np.sign(fa)
            a = np.where(same, m, a)
            fa = np.where(same, fm, fa)
            b = np.where(same, b, m)
        return 0.5 * (a + b)
    raise GapDetected(family.family_id, n_lo, (float(t_start), float(t_end)))
