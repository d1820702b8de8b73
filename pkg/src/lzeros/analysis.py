"""Statistics and arithmetic built on solved zeros.

Two consumers: the pair-correlation histogram of normalized zero spacings
compared against the random-matrix kernel 1 - sin^2(pi u)/(pi u)^2, and the
explicit formulas reconstructing the prime-counting functions J(x), pi(x)
and Chebyshev psi(x) from a truncated sum over zeros.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, isqrt, log, pi, sin, sqrt

import numpy as np

from mpmath import mp, mpc, mpf

from .numerics import GUARD_DIGITS, DomainError


# ---------------------------------------------------------------------------
# Arithmetic functions
# ---------------------------------------------------------------------------

def sieve_primes(bound: int):
    """All primes <= bound by Eratosthenes."""
    if bound < 2:
        return []
    flags = np.ones(bound + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, isqrt(bound) + 1):
        if flags[p]:
            flags[p * p:: p] = False
    return np.flatnonzero(flags).tolist()


def mobius(n: int) -> int:
    if n < 1:
        raise DomainError("mobius is defined for n >= 1")
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def von_mangoldt(n: int) -> float:
    """log p if n = p^m, else 0."""
    if n < 1:
        raise DomainError("von_mangoldt is defined for n >= 1")
    if n == 1:
        return 0.0
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            return log(p) if m == 1 else 0.0
        p += 1
    return log(m)


@dataclass(frozen=True)
class ArithmeticTables:
    """mu, Lambda and the prime list up to a bound, precomputed."""

    bound: int
    mobius: tuple
    von_mangoldt: tuple
    primes: tuple

    @classmethod
    def up_to(cls, bound: int) -> "ArithmeticTables":
        primes = sieve_primes(bound)
        mu = np.ones(bound + 1, dtype=np.int64)
        sq = np.zeros(bound + 1, dtype=bool)
        lam = np.zeros(bound + 1)
        for p in primes:
            mu[p::p] *= -1
            sq[p * p:: p * p] = True
            pe = p
            while pe <= bound:
                lam[pe] = log(p)
                pe *= p
        mu[sq] = 0
        mu[0] = 0
        return cls(bound, tuple(int(v) for v in mu),
                   tuple(float(v) for v in lam), tuple(primes))

    def pi(self, x) -> int:
        """Sieve prime-counting pi(x)."""
        from bisect import bisect_right
        return bisect_right(self.primes, floor(x))


# ---------------------------------------------------------------------------
# Pair correlation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PairCorrelationBin:
    alpha: float
    beta: float
    empirical: float
    kernel: float

    def __post_init__(self):
        if not self.alpha < self.beta:
            raise ValueError("bin edges must satisfy alpha < beta")


def gue_kernel(u: float) -> float:
    """1 - sin^2(pi u)/(pi u)^2, the pair-correlation density."""
    if u == 0:
        return 0.0
    return 1.0 - (sin(pi * u) / (pi * u)) ** 2


def _kernel_bin_average(alpha: float, beta: float, steps: int = 200) -> float:
    """Average of the kernel over [alpha, beta] (Simpson's rule)."""
    if steps % 2:
        steps += 1
    h = (beta - alpha) / steps
    total = gue_kernel(alpha) + gue_kernel(beta)
    for i in range(1, steps):
        total += gue_kernel(alpha + i * h) * (4 if i % 2 else 2)
    return total * h / (3 * (beta - alpha))


def pair_correlation(zeros, M: int, N: int, bins):
    """Histogram of normalized distances between zeros with indices in [M, N].

    ``zeros`` lists ordinates t_M..t_N (one extra trailing ordinate t_{N+1}
    is accepted and used for the last spacing).  The normalized gap is
    d_n = (1/2pi) log(t_n/2pi) (t_{n+1} - t_n) and distances are cumulative
    sums of consecutive gaps; each bin's count is divided by
    (N - M)(beta - alpha) for comparison with the GUE kernel.
    """
    zeros = np.asarray(zeros, dtype=float)
    count = N - M + 1
    if len(zeros) < count or count < 2:
        raise ValueError("zeros must cover the contiguous index range [M, N]")
    if np.any(np.diff(zeros[:count]) <= 0):
        raise ValueError("ordinates must be strictly increasing")
    t = zeros[:count]
    gaps = np.diff(t) * np.log(t[:-1] / (2 * pi)) / (2 * pi)
    cum = np.concatenate([[0.0], np.cumsum(gaps)])
    edges = [(float(a), float(b)) for a, b in bins]
    lo = min(a for a, _ in edges)
    hi = max(b for _, b in edges)
    # Collect all pair distances within the histogram window with a sliding
    # two-pointer pass over the cumulative positions.
    dists = []
    j_lo = 0
    for i in range(len(cum)):
        j = i + 1
        while j < len(cum) and cum[j] - cum[i] <= hi:
            d = cum[j] - cum[i]
            if d >= lo:
                dists.append(d)
            j += 1
    dists = np.sort(np.asarray(dists))
    norm = N - M
    out = []
    for a, b in edges:
        k = int(np.searchsorted(dists, b, "left")
                - np.searchsorted(dists, a, "left"))
        out.append(PairCorrelationBin(
            alpha=a, beta=b,
            empirical=k / (norm * (b - a)),
            kernel=_kernel_bin_average(a, b),
        ))
    return out


def uniform_bins(lo: float, hi: float, width: float):
    """Adjacent (alpha, beta) pairs of the given width covering [lo, hi]."""
    n = int(round((hi - lo) / width))
    return [(lo + i * width, lo + (i + 1) * width) for i in range(n)]


# ---------------------------------------------------------------------------
# Explicit formulas
# ---------------------------------------------------------------------------

def _li_rho(rho, logx, P):
    """Li(x^rho) = Ei(rho log x) on the principal branch."""
    return mp.ei(rho * logx)


def j_from_zeros(x, zeros, P: int = 30) -> float:
    """Riemann's prime-power counting J(x) from a truncated zero sum:
    Li(x) - sum_rho Li(x^rho) + integral_x^inf dt/(t(t^2-1)log t) - log 2,
    with conjugate pairs folded into 2 Re Li(x^rho)."""
    with mp.workdps(P + GUARD_DIGITS):
        x = mpf(x)
        if x <= 1:
            raise DomainError("explicit formulas need x > 1")
        logx = mp.log(x)
        total = mp.li(x)
        for t in zeros:
            rho = mpc(mpf(1) / 2, mpf(t))
            total -= 2 * _li_rho(rho, logx, P).real
        total += mp.quad(lambda u: 1 / (u * (u * u - 1) * mp.log(u)),
                         [x, mp.inf])
        total -= mp.log(2)
        return float(total)


def pi_from_zeros(x, zeros, P: int = 30) -> float:
    """Prime counting via Moebius inversion of J:
    pi(x) = sum_{m >= 1} mu(m)/m J(x^{1/m}), a finite sum (x^{1/m} >= 2)."""
    with mp.workdps(P + GUARD_DIGITS):
        x = mpf(x)
        if x <= 1:
            raise DomainError("explicit formulas need x > 1")
        total = mpf(0)
        m = 1
        while x ** (mpf(1) / m) >= 2:
            mu = mobius(m)
            if mu:
                total += mpf(mu) / m * j_from_zeros(x ** (mpf(1) / m),
                                                    zeros, P)
            m += 1
        return float(total)


def psi_from_zeros(x, zeros, P: int = 30) -> float:
    """Chebyshev psi(x) = x - sum_rho x^rho/rho - log 2pi - log(1-x^-2)/2."""
    with mp.workdps(P + GUARD_DIGITS):
        x = mpf(x)
        if x <= 1:
            raise DomainError("explicit formulas need x > 1")
        logx = mp.log(x)
        total = x - mp.log(2 * mp.pi) - mp.log(1 - x ** -2) / 2
        for t in zeros:
            rho = mpc(mpf(1) / 2, mpf(t))
            total -= 2 * (mp.exp(rho * logx) / rho).real
        return float(total)


# ---------------------------------------------------------------------------
# Exact arithmetic side (no zeros involved)
# ---------------------------------------------------------------------------

def j_exact(x, tables: ArithmeticTables) -> Fraction:
    """J(x) = sum over prime powers p^m <= x of 1/m, as an exact rational."""
    total = Fraction(0)
    for p in tables.primes:
        if p > x:
            break
        pe, m = p, 1
        while pe <= x:
            total += Fraction(1, m)
            pe *= p
            m += 1
    return total


def pi_from_j_exact(x: int, tables: ArithmeticTables) -> Fraction:
    """Moebius inversion of the exact J; equals sieve pi(x) for integer x."""
    total = Fraction(0)
    m = 1
    while x ** (1.0 / m) >= 2:
        mu = mobius(m)
        if mu:
            xm = floor(x ** (1.0 / m) + 1e-9)
            # Guard against float roots landing just below an integer.
            while (xm + 1) ** m <= x:
                xm += 1
            while xm ** m > x:
                xm -= 1
            total += Fraction(mu, m) * j_exact(xm, tables)
        m += 1
    return total


def chebyshev_psi(x, tables: ArithmeticTables) -> float:
    return sum(tables.von_mangoldt[n] for n in range(1, floor(x) + 1))


# ---------------------------------------------------------------------------
# CSV emitters
# ---------------------------------------------------------------------------

def pair_correlation_csv(bins) -> str:
    lines = ["x_mid,empirical,kernel"]
    for b in bins:
        lines.append(f"{(b.alpha + b.beta) / 2:.6f},{b.empirical:.8f},"
                     f"{b.kernel:.8f}")
    return "\n".join(lines) + "\n"


def prime_count_csv(rows) -> str:
    """rows: iterable of (x, pi_reconstructed, pi_exact)."""
    lines = ["x,pi_reconstructed,pi_exact"]
    for x, rec, exact in rows:
        lines.append(f"{x:.6f},{rec:.8f},{exact}")
    return "\n".join(lines) + "\n"


def staircase_csv(points) -> str:
    """points: iterable of CountingPoint."""
    lines = ["T,N0,N,S"]
    for p in points:
        lines.append(f"{p.T:.6f},{p.n_critical:.8f},{p.n_strip:.8f},"
                     f"{p.s_term:.8f}")
    return "\n".join(lines) + "\n"
