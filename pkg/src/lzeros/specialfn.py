"""Phase and special functions entering the transcendental equations.

The central object is the continuous phase of a Gamma factor along a
vertical line: the Riemann-Siegel theta function and its generalizations to
Dirichlet (modulus k, parity a) and modular (even weight k) settings.
All arg Gamma values are taken as Im of the branch-continuous log Gamma,
never as a principal-value arctangent of Gamma itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp, mpc, mpf

from .numerics import GUARD_DIGITS, DomainError


@dataclass(frozen=True)
class ThetaKind:
    """Which theta variant: 'rs' (Riemann-Siegel), 'generalized', 'modular'."""

    variant: str
    k: int = 1
    a: int = 0

    def __post_init__(self):
        if self.variant not in ("rs", "generalized", "modular"):
            raise ValueError(f"unknown theta variant {self.variant!r}")
        if self.variant == "rs" and (self.k, self.a) != (1, 0):
            raise ValueError("rs variant has fixed k=1, a=0")
        if self.variant == "generalized":
            if self.k < 1 or self.a not in (0, 1):
                raise ValueError("generalized variant needs k >= 1, a in {0,1}")
        if self.variant == "modular":
            if self.k < 4 or self.k % 2:
                raise ValueError("modular weight must be even and >= 4")

    @classmethod
    def riemann_siegel(cls):
        return cls("rs")

    @classmethod
    def generalized(cls, k: int, a: int):
        return cls("generalized", k, a)

    @classmethod
    def modular(cls, k: int):
        return cls("modular", k)


def log_gamma(s, P: int = 30):
    """Branch-continuous log Gamma with log_gamma(1) = 0.

    Raises DomainError at the poles (non-positive integers).
    """
    with mp.workdps(P + GUARD_DIGITS):
        s = mpc(s)
        if s.imag == 0 and s.real == mp.floor(s.real) and s.real <= 0:
            raise DomainError(f"log_gamma pole at s = {s.real}")
        return +mp.loggamma(s)


def theta(kind: ThetaKind, t, P: int = 30):
    """Continuous phase theta for the given variant at real t.

    'rs':          Im log Gamma(1/4 + it/2) - (t/2) log pi
    'generalized': Im log Gamma(1/4 + a/2 + it/2) - (t/2) log(pi/k)
    'modular':     Im log Gamma(k/2 + it) - t log(2 pi)
    """
    with mp.workdps(P + GUARD_DIGITS):
        t = mpf(t)
        if kind.variant == "modular":
            val = mp.loggamma(mpc(mpf(kind.k) / 2, t)).imag - t * mp.log(2 * mp.pi)
        else:
            sigma = mpf(1) / 4 + mpf(kind.a) / 2
            val = (mp.loggamma(mpc(sigma, t / 2)).imag
                   - t / 2 * mp.log(mp.pi / kind.k))
        return +val


def theta_asymptotic(kind: ThetaKind, t, P: int = 30):
    """Leading-order phase, exact up to O(1/t); odd in t by construction."""
    with mp.workdps(P + GUARD_DIGITS):
        t = mpf(t)
        if t == 0:
            return mpf(0)
        sgn = 1 if t > 0 else -1
        u = abs(t)
        if kind.variant == "modular":
            val = u * mp.log(u / (2 * mp.pi * mp.e)) + (kind.k - 1) * mp.pi / 4
        else:
            val = (u / 2 * mp.log(kind.k * u / (2 * mp.pi * mp.e))
                   + (2 * kind.a - 1) * mp.pi / 8)
        return +(sgn * val)


def upper_incomplete_gamma(s, x, P: int = 30):
    """Upper incomplete Gamma(s, x) for complex s and real x > 0."""
    with mp.workdps(P + GUARD_DIGITS):
        x = mpf(x)
        if x <= 0:
            raise DomainError("upper_incomplete_gamma requires x > 0")
        return +mp.gammainc(mpc(s), a=x, b=mp.inf)


def exp_integral_ei(z, P: int = 30):
    """Exponential integral Ei(z), principal branch (cut along R^-).

    Li(x^rho) is evaluated as Ei(rho log x) throughout the package.
    """
    with mp.workdps(P + GUARD_DIGITS):
        z = mpc(z)
        if z == 0:
            raise DomainError("Ei is singular at z = 0")
        val = mp.ei(z)
        return +val
