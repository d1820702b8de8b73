"""The four L-function families and their arbitrary-precision evaluators.

Continuation strategies:
  * zeta: mpmath's zeta (Euler-Maclaurin / Riemann-Siegel internally).
  * Dirichlet L: L(s, chi) = k^-s sum_m chi(m) zeta_H(s, m/k) with the
    Hurwitz zeta, giving uniform precision control on the strip.
  * modular L: incomplete-gamma approximate functional equation with a
    certified tail bound from |a_n| <= d(n) n^{(k-1)/2}.
  * Davenport-Heilbronn: fixed linear combination of two Dirichlet L's.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import gmpy2

from mpmath import mp, mpc, mpf

from .characters import DirichletCharacter, build_character, gauss_sum
from .numerics import GUARD_DIGITS, DomainError
from .specialfn import ThetaKind


class CutoffInsufficientError(ArithmeticError):
    """The modular Dirichlet-series tail bound exceeds the precision target."""


# ---------------------------------------------------------------------------
# Ramanujan tau coefficients from the 24th power of the Dedekind eta series
# ---------------------------------------------------------------------------

def _eta_coefficients(N: int):
    """Coefficients of prod (1 - q^n) up to q^N (pentagonal number theorem)."""
    coeffs = [0] * (N + 1)
    coeffs[0] = 1
    j = 1
    while True:
        g1 = j * (3 * j - 1) // 2
        g2 = j * (3 * j + 1) // 2
        if g1 > N and g2 > N:
            break
        sign = -1 if j % 2 else 1
        if g1 <= N:
            coeffs[g1] = sign
        if g2 <= N:
            coeffs[g2] = sign
        j += 1
    return coeffs


def _poly_mul_trunc(a, b, N: int):
    """Product of integer polynomials truncated at degree N, via Kronecker
    substitution on gmpy2 integers (fast big-int multiply)."""
    # Coefficient bound for the limb width: |c| < 2^(limb-1) must hold for
    # every intermediate coefficient.
    limb = 256
    base = gmpy2.mpz(1) << limb
    half = base >> 1

    def pack(poly):
        acc = gmpy2.mpz(0)
        for c in reversed(poly):
            acc = (acc << limb) + c
        return acc

    prod = pack(a) * pack(b)
    out = []
    carry = 0
    for _ in range(N + 1):
        digit = (prod & (base - 1)) + carry
        prod >>= limb
        if digit >= half:
            digit -= base
            carry = 1
        else:
            carry = 0
        out.append(int(digit))
    return out


@dataclass(frozen=True)
class TauTable:
    """Exact Ramanujan tau(1..N) from Delta = eta^24."""

    values: tuple

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= len(self.values):
            raise IndexError(f"tau({n}) not cached (N = {len(self.values)})")
        return self.values[n - 1]


def ramanujan_tau(N: int) -> TauTable:
    """tau(1..N): Delta(q) = q prod (1-q^n)^24; 4 squarings + 1 multiply."""
    if N < 1:
        raise ValueError("N must be >= 1")
    M = N - 1  # Delta = q * f^24, so f^24 is needed up to degree N-1
    f = _eta_coefficients(M)
    f2 = _poly_mul_trunc(f, f, M)
    f4 = _poly_mul_trunc(f2, f2, M)
    f8 = _poly_mul_trunc(f4, f4, M)
    f16 = _poly_mul_trunc(f8, f8, M)
    f24 = _poly_mul_trunc(f16, f8, M)
    return TauTable(tuple(f24[: N]))


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------

def _dh_kappa(P: int):
    with mp.workdps(P + GUARD_DIGITS):
        return +((mp.sqrt(10 - 2 * mp.sqrt(5)) - 2) / (mp.sqrt(5) - 1))


@dataclass(frozen=True)
class LFunctionFamily:
    """One of: zeta | dirichlet(chi) | modular level one (weight, coeffs) | DH.

    label_offset is the n -> n - n0 relabeling; 0 for every family treated
    here.
    """

    kind: str                                # 'zeta' | 'dirichlet' | 'modular' | 'dh'
    character: DirichletCharacter | None = None
    weight: int = 0
    coefficients: tuple = ()                 # integer a_f(n) for modular
    label_offset: int = 0

    def __post_init__(self):
        if self.kind == "dirichlet":
            if self.character is None:
                raise ValueError("dirichlet family needs a character")
            if not self.character.is_primitive:
                raise ValueError("dirichlet family requires a primitive character")
        if self.kind == "modular":
            if self.weight < 4 or self.weight % 2:
                raise ValueError("modular weight must be even and >= 4")
            if not self.coefficients or self.coefficients[0] != 1:
                raise ValueError("modular coefficients must start with a(1) = 1")

    # -- metadata ----------------------------------------------------------

    @property
    def critical_sigma(self) -> Fraction:
        if self.kind == "modular":
            return Fraction(self.weight, 2)
        return Fraction(1, 2)

    @property
    def theta_kind(self) -> ThetaKind:
        if self.kind == "zeta":
            return ThetaKind.riemann_siegel()
        if self.kind == "dirichlet":
            return ThetaKind.generalized(self.character.modulus,
                                         self.character.order_a)
        if self.kind == "modular":
            return ThetaKind.modular(self.weight)
        return ThetaKind.generalized(5, 1)  # Davenport-Heilbronn

    @property
    def family_id(self) -> str:
        if self.kind == "zeta":
            return "zeta"
        if self.kind == "dirichlet":
            chi = self.character
            if chi.index is not None:
                return f"dirichlet-{chi.modulus}-{chi.index}"
            return f"dirichlet-{chi.modulus}-x"
        if self.kind == "modular":
            return f"modular-{self.weight}"
        return "dh"

    # -- evaluation --------------------------------------------------------

    def eval(self, s, P: int = 30):
        if self.kind == "zeta":
            return eval_zeta(s, P)
        if self.kind == "dirichlet":
            return eval_dirichlet_l(self.character, s, P)
        if self.kind == "modular":
            return eval_modular_l(self, s, P)
        return eval_davenport_heilbronn(s, P)


def zeta_family() -> LFunctionFamily:
    return LFunctionFamily("zeta")


def dirichlet_family(chi: DirichletCharacter) -> LFunctionFamily:
    return LFunctionFamily("dirichlet", character=chi)


def ramanujan_family(N: int = 1200) -> LFunctionFamily:
    tau = ramanujan_tau(N)
    return LFunctionFamily("modular", weight=12, coefficients=tau.values)


def modular_family(weight: int, coefficients) -> LFunctionFamily:
    return LFunctionFamily("modular", weight=weight,
                           coefficients=tuple(coefficients))


def dh_family() -> LFunctionFamily:
    return LFunctionFamily("dh")


_CHI52 = build_character(5, 2)


# ---------------------------------------------------------------------------
# Evaluators
# ---------------------------------------------------------------------------

def eval_zeta(s, P: int = 30):
    with mp.workdps(P + GUARD_DIGITS):
        s = mpc(s)
        if s == 1:
            raise DomainError("zeta has a pole at s = 1")
        return +mp.zeta(s)


def eval_dirichlet_l(chi: DirichletCharacter, s, P: int = 30):
    """L(s, chi) = k^-s sum_{m=1}^{k} chi(m) zeta_H(s, m/k), s != 1."""
    k = chi.modulus
    with mp.workdps(P + GUARD_DIGITS):
        s = mpc(s)
        if s == 1:
            raise DomainError("use the strip; s = 1 hits the Hurwitz pole")
        total = mpc(0)
        for m in range(1, k + 1):
            r = chi.exponent(m)
            if r is None:
                continue
            total += (mp.expjpi(2 * mpf(r.numerator) / r.denominator)
                      * mp.zeta(s, mpf(m) / k))
        return +(mp.power(k, -s) * total)


def induced_l(chi: DirichletCharacter, big_modulus: int, s, P: int = 30):
    """L for the non-primitive character mod big_modulus induced by chi:
    L(s, chi) * prod_{p | big_modulus} (1 - chi(p) p^-s)."""
    if big_modulus % chi.modulus:
        raise ValueError("big_modulus must be a multiple of the conductor")
    from .characters import _factorize
    with mp.workdps(P + GUARD_DIGITS):
        s = mpc(s)
        val = eval_dirichlet_l(chi, s, P)
        for p, _ in _factorize(big_modulus):
            val *= 1 - chi.value(p, P) * mp.power(p, -s)
        return +val


def _divisor_count(n: int) -> int:
    d, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            d *= e + 1
        p += 1
    if m > 1:
        d *= 2
    return d


def _modular_cutoff(family, s, eps, P: int):
    """Smallest N with a certified tail bound below eps for the completed sum."""
    k = family.weight
    sigma = s.real
    tmag = abs(s.imag)
    # Need 2 pi n comfortably beyond |s| so |Gamma(z, x)| <= 2 x^(Re z - 1) e^-x.
    n0 = max(2, int((tmag + k) / (2 * mp.pi)) + 2)
    n = n0
    while True:
        bound = mpf(0)
        # Two or three leading tail terms plus a geometric majorant.
        for m in (n + 1, n + 2, n + 3):
            x = 2 * mp.pi * m
            amp = _divisor_count(m) * mp.power(m, mpf(k - 1) / 2)
            expo = max(sigma, k - sigma) - k
            bound += 2 * amp * mp.power(x, expo) * x * mp.exp(-x)
        bound *= 1 / (1 - mp.exp(-2 * mp.pi))
        if bound < eps:
            return n
        if n > len(family.coefficients):
            raise CutoffInsufficientError(
                f"need more than {len(family.coefficients)} coefficients "
                f"for this precision")
        n += max(1, n // 8)


def completed_modular_l(family: LFunctionFamily, s, P: int = 30):
    """Lambda_f(s) = (2 pi)^-s Gamma(s) L_f(s) by the incomplete-gamma
    decomposition, valid on the whole strip 0 < Re s < k.

    Lambda itself is of size e^{-pi|t|/2} while the series terms are O(1),
    so the sum cancels ~0.68|t| digits; the working precision carries that
    many extra guard digits internally to keep the relative error at the
    requested level.
    """
    k = family.weight
    cancel = int(3.1416 * abs(complex(s).imag) / (2 * 2.302585)) + 10
    with mp.workdps(P + cancel + GUARD_DIGITS):
        s = mpc(s)
        eps = mpf(10) ** (-(P + 2)) * mp.exp(-mp.pi * abs(s.imag) / 2)
        N = _modular_cutoff(family, s, eps, P)
        if N > len(family.coefficients):
            raise CutoffInsufficientError(
                f"cutoff {N} exceeds cached coefficients "
                f"({len(family.coefficients)})")
        sign = -1 if (k // 2) % 2 else 1
        total = mpc(0)
        for n in range(1, N + 1):
            a = family.coefficients[n - 1]
            if a == 0:
                continue
            x = 2 * mp.pi * n
            total += a * (mp.power(x, -s) * mp.gammainc(s, a=x, b=mp.inf)
                          + sign * mp.power(x, s - k)
                          * mp.gammainc(k - s, a=x, b=mp.inf))
        return +total


def eval_modular_l(family: LFunctionFamily, s, P: int = 30):
    """L_f(s) on the critical strip via the completed function."""
    with mp.workdps(P + GUARD_DIGITS):
        s = mpc(s)
        lam = completed_modular_l(family, s, P)
        return +(lam * mp.power(2 * mp.pi, s) / mp.gamma(s))


def eval_davenport_heilbronn(s, P: int = 30):
    """D(s) = (1 - i kappa)/2 L(s, chi_52) + (1 + i kappa)/2 L(s, conj chi_52)."""
    with mp.workdps(P + GUARD_DIGITS):
        s = mpc(s)
        kappa = _dh_kappa(P)
        l1 = eval_dirichlet_l(_CHI52, s, P)
        l2 = eval_dirichlet_l(_CHI52.conjugate(), s, P)
        return +((1 - mpc(0, 1) * kappa) / 2 * l1
                 + (1 + mpc(0, 1) * kappa) / 2 * l2)


# ---------------------------------------------------------------------------
# Completed functions (for functional-equation checks)
# ---------------------------------------------------------------------------

def completed_zeta(s, P: int = 30):
    """chi(s) = pi^{-s/2} Gamma(s/2) zeta(s)."""
    with mp.workdps(P + GUARD_DIGITS):
        s = mpc(s)
        return +(mp.power(mp.pi, -s / 2) * mp.gamma(s / 2) * mp.zeta(s))


def completed_dirichlet(chi: DirichletCharacter, s, P: int = 30):
    """Lambda(s, chi) = (k/pi)^{(s+a)/2} Gamma((s+a)/2) L(s, chi)."""
    a = chi.order_a
    k = chi.modulus
    with mp.workdps(P + GUARD_DIGITS):
        s = mpc(s)
        return +(mp.power(mpf(k) / mp.pi, (s + a) / 2) * mp.gamma((s + a) / 2)
                 * eval_dirichlet_l(chi, s, P))


def xi_dirichlet(chi: DirichletCharacter, s, P: int = 30):
    """xi(s, chi) = i^{a/2} k^{1/4} / sqrt(G(chi)) * Lambda(s, chi); real on
    the critical line for primitive chi."""
    a = chi.order_a
    k = chi.modulus
    with mp.workdps(P + GUARD_DIGITS):
        s = mpc(s)
        g = gauss_sum(chi, P + 10)
        pref = mp.expjpi(mpf(a) / 4) * mp.power(k, mpf(1) / 4) / mp.sqrt(g)
        return +(pref * completed_dirichlet(chi, s, P))


def dh_xi(s, P: int = 30):
    """xi(s) = (pi/5)^{-s/2} Gamma((1+s)/2) D(s); satisfies xi(s) = xi(1-s)."""
    with mp.workdps(P + GUARD_DIGITS):
        s = mpc(s)
        return +(mp.power(mp.pi / 5, -s / 2) * mp.gamma((1 + s) / 2)
                 * eval_davenport_heilbronn(s, P))
