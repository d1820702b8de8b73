"""Precision policy, bracketed root finding and the Lambert W function.

Everything here works on mpmath numbers at an explicitly requested decimal
precision ``P``.  Internally all evaluations carry ``GUARD_DIGITS`` extra
digits so that results are accurate to roughly ``10**-(P - 2)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from mpmath import mp, mpf

GUARD_DIGITS = 10


class DomainError(ValueError):
    """Argument outside the mathematical domain of the operation."""


class NoSignChangeError(ArithmeticError):
    """The bracket does not straddle a root (possible missing solution)."""

    def __init__(self, msg, bracket=None):
        super().__init__(msg)
        self.bracket = bracket


class NonConvergenceError(ArithmeticError):
    """Iteration cap reached without meeting the tolerance."""


@dataclass
class PrecisionPolicy:
    """Schedule driving the iterative solve loop.

    Each round the off-line offset ``delta`` is divided by ``delta_shrink``
    and the working precision grows by ``digits_increment`` decimal digits.
    The loop stops once the modulus of the L-function at the candidate zero
    drops below ``target_residual``.
    """

    initial_delta: float = 1e-3
    delta_shrink: float = 1000.0
    initial_digits: int = 15
    digits_increment: int = 20
    target_residual: float = 1e-20
    max_iterations: int = 60

    def __post_init__(self):
        if not 0 < self.initial_delta < 1:
            raise ValueError("initial_delta must be in (0, 1)")
        if self.delta_shrink <= 1:
            raise ValueError("delta_shrink must exceed 1")
        if self.digits_increment < 1:
            raise ValueError("digits_increment must be >= 1")
        if self.target_residual <= 0:
            raise ValueError("target_residual must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")

    def schedule(self):
        """Yield (iteration, delta, digits) without ever letting delta hit 0."""
        delta = mpf(self.initial_delta)
        digits = self.initial_digits
        for i in range(self.max_iterations):
            yield i, delta, digits
            delta = delta / mpf(self.delta_shrink)
            digits += self.digits_increment

    @classmethod
    def for_digits(cls, digits: int, **overrides) -> "PrecisionPolicy":
        """Policy whose residual target certifies ``digits`` correct digits."""
        kw = dict(target_residual=10.0 ** -(digits + 5),
                  digits_increment=8,
                  max_iterations=max(10, digits // 4 + 10))
        kw.update(overrides)
        return cls(**kw)


def lambert_w0(x, P: int = 30):
    """Principal branch W0 of the Lambert W function for real x >= -1/e.

    Solves w*exp(w) = x by Halley iteration from an asymptotic seed; the
    result satisfies the defining equation to about 10**-(P-2).
    """
    with mp.workdps(P + GUARD_DIGITS):
        x = mpf(x)
        lower = -mp.exp(-1)
        if x < lower:
            raise DomainError(f"lambert_w0 requires x >= -1/e, got {x}")
        if x == 0:
            return mpf(0)
        # Seed choice: asymptotic for large x, series near 0, branch-point
        # expansion near -1/e.
        if x > mp.e:
            w = mp.log(x) - mp.log(mp.log(x))
        elif x > -mpf("0.25") / mp.e:
            w = x / (1 + x)
        else:
            p = mp.sqrt(2 * (1 + mp.e * x))
            w = -1 + p - p * p / 3
        tol = mpf(10) ** (-(P + 4))
        for _ in range(200):
            ew = mp.exp(w)
            f = w * ew - x
            wp1 = w + 1
            if wp1 == 0:
                break
            # Halley step for f(w) = w e^w - x.
            denom = ew * wp1 - (w + 2) * f / (2 * wp1)
            step = f / denom
            w = w - step
            if abs(step) <= tol * max(mpf(1), abs(w)):
                break
        else:
            raise NonConvergenceError("lambert_w0 failed to converge")
        return +w


def find_root(f, bracket, P: int = 30, tol=None, xtol=None, max_iter=None):
    """Bisection-guarded secant root finder on a sign-changing bracket.

    ``f`` must be continuous and (effectively) monotone on ``bracket``.
    Returns t inside the original bracket with either |f(t)| <= tol or the
    bracket narrowed below ``xtol``.  Deterministic for fixed inputs.

    Raises NoSignChangeError when f(lo) and f(hi) have the same sign, which
    the solver uses as the missing-solution signal.
    """
    lo, hi = bracket
    with mp.workdps(P + GUARD_DIGITS):
        lo, hi = mpf(lo), mpf(hi)
        if not lo < hi:
            raise ValueError("bracket must satisfy lo < hi")
        if tol is None:
            tol = mpf(10) ** (-(P - 2))
        else:
            tol = mpf(tol)
        if xtol is None:
            xtol = mpf(10) ** (-P) * max(mpf(1), abs(hi))
        else:
            xtol = mpf(xtol)
        if max_iter is None:
            max_iter = 80 + 4 * P

        flo = mpf(f(lo))
        if abs(flo) <= tol:
            return lo
        fhi = mpf(f(hi))
        if abs(fhi) <= tol:
            return hi
        if flo * fhi > 0:
            raise NoSignChangeError(
                f"no sign change on [{mp.nstr(lo, 12)}, {mp.nstr(hi, 12)}]",
                bracket=(lo, hi))

        a, b, fa, fb = lo, hi, flo, fhi
        # Previous point for the secant proposal.
        c, fc = a, fa
        for _ in range(max_iter):
            if b - a <= xtol:
                return a if abs(fa) < abs(fb) else b
            t = None
            if fb != fc and c != b:
                t = b - fb * (b - c) / (fb - fc)
            if t is None or not (a < t < b):
                t = (a + b) / 2
            # Keep away from the ends so the bracket always shrinks.
            margin = (b - a) / 64
            t = min(max(t, a + margin), b - margin)
            ft = mpf(f(t))
            if abs(ft) <= tol:
                return t
            c, fc = b, fb
            if fa * ft <= 0:
                b, fb = t, ft
            else:
                a, fa = t, ft
        raise NonConvergenceError("find_root: iteration cap reached")
