"""Dirichlet characters with exact root-of-unity values.

A character value is stored as a rational exponent r meaning e^{2 pi i r}
(or None for 0), so the multiplicative axioms can be checked exactly.  The
(k, j) indexing is deterministic: the unit group mod k is decomposed into
cyclic factors with fixed generators (smallest primitive root for odd prime
powers, {-1, 5} for 2^e), ordered by increasing prime, and j-1 is read as a
mixed-radix number over the factor orders, least significant factor first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from mpmath import mp, mpc, mpf

from .numerics import GUARD_DIGITS


class CharacterError(ValueError):
    """Invalid character construction (axiom violation, bad index)."""


def euler_phi(k: int) -> int:
    result, n, p = 1, k, 2
    while p * p <= n:
        if n % p == 0:
            pe = 1
            while n % p == 0:
                n //= p
                pe *= p
            result *= pe - pe // p
        p += 1
    if n > 1:
        result *= n - 1
    return result


def _factorize(k: int):
    out, n, p = [], k, 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def _primitive_root(q: int) -> int:
    """Smallest primitive root mod q for q in {2, 4, p^e, 2p^e}."""
    phi = euler_phi(q)
    prime_factors = [p for p, _ in _factorize(phi)]
    for g in range(2, q):
        if gcd(g, q) != 1:
            continue
        if all(pow(g, phi // p, q) != 1 for p in prime_factors):
            return g
    raise CharacterError(f"no primitive root mod {q}")


@lru_cache(maxsize=None)
def _unit_group(k: int):
    """Cyclic decomposition of (Z/kZ)*: list of (modulus q, generator, order)."""
    if k == 1:
        return ()
    factors = []
    for p, e in _factorize(k):
        q = p ** e
        if p == 2:
            if e == 1:
                continue  # trivial group
            if e == 2:
                factors.append((q, 3, 2))
            else:
                factors.append((q, q - 1, 2))
                factors.append((q, 5, 2 ** (e - 2)))
        else:
            factors.append((q, _primitive_root(q), euler_phi(q)))
    return tuple(factors)


def _dlog(n: int, q: int, g: int, order: int) -> int:
    """Discrete log of n to base g in the cyclic subgroup of (Z/qZ)*."""
    acc = 1
    for m in range(order):
        if acc == n % q:
            return m
        acc = acc * g % q
    raise CharacterError(f"{n} not in <{g}> mod {q}")


@dataclass(frozen=True)
class DirichletCharacter:
    """Character mod k with exact values: exponents[n] = r with chi(n) = e^{2 pi i r}.

    exponents has length k, indexed by n mod k; None encodes chi(n) = 0.
    """

    modulus: int
    exponents: tuple
    index: int | None = None

    def __post_init__(self):
        _validate_axioms(self.modulus, self.exponents)

    # -- exact values ------------------------------------------------------

    def exponent(self, n: int):
        return self.exponents[n % self.modulus]

    def is_zero(self, n: int) -> bool:
        return self.exponent(n) is None

    def value(self, n: int, P: int = 30):
        r = self.exponent(n)
        with mp.workdps(P + GUARD_DIGITS):
            if r is None:
                return mpc(0)
            return +mp.expjpi(2 * mpf(r.numerator) / r.denominator)

    def conjugate(self) -> "DirichletCharacter":
        exps = tuple(None if r is None else (-r) % 1 for r in self.exponents)
        return DirichletCharacter(self.modulus, exps)

    # -- derived data ------------------------------------------------------

    @property
    def order_a(self) -> int:
        """1 for odd characters (chi(-1) = -1), 0 for even."""
        if self.modulus <= 2:
            return 0
        return 1 if self.exponent(self.modulus - 1) == Fraction(1, 2) else 0

    @property
    def is_principal(self) -> bool:
        return all(r is None or r == 0 for r in self.exponents)

    @property
    def is_primitive(self) -> bool:
        k = self.modulus
        if k == 1:
            return True
        for p, _ in _factorize(k):
            d = k // p
            # chi induced mod d iff chi(n) = 1 whenever n = 1 (mod d), (n,k)=1
            induced = all(
                self.exponent(n) == 0
                for n in range(1, k + 1)
                if n % d == 1 % d and gcd(n, k) == 1)
            if induced:
                return False
        return True

    def is_real(self) -> bool:
        return all(r is None or r.denominator <= 2 for r in self.exponents)


def _validate_axioms(k: int, exponents):
    if k < 1:
        raise CharacterError("modulus must be >= 1")
    if len(exponents) != k:
        raise CharacterError("value table must have k entries")
    for n in range(k):
        r = exponents[n]
        coprime = gcd(n, k) == 1
        if coprime and r is None:
            raise CharacterError(f"chi({n}) = 0 but gcd({n},{k}) = 1")
        if not coprime and r is not None:
            raise CharacterError(f"chi({n}) != 0 but gcd({n},{k}) > 1")
        if r is not None and not 0 <= r < 1:
            raise CharacterError("exponents must be reduced mod 1")
    if k >= 1 and exponents[1 % k] != 0:
        raise CharacterError("chi(1) must equal 1")
    phi = euler_phi(k)
    for n in range(k):
        rn = exponents[n]
        if rn is not None and (rn * phi) % 1 != 0:
            raise CharacterError(f"chi({n}) is not a phi(k)-th root of unity")
        for m in range(n, k):
            rm = exponents[m]
            if rn is None or rm is None:
                continue
            rp = exponents[(n * m) % k]
            if rp is None or (rn + rm - rp) % 1 != 0:
                raise CharacterError(
                    f"multiplicativity fails at chi({n})*chi({m})")


def build_character(k: int, j: int) -> DirichletCharacter:
    """The j-th character mod k, 1 <= j <= phi(k), in the generator ordering."""
    phi = euler_phi(k)
    if not 1 <= j <= phi:
        raise CharacterError(f"index j must be in [1, {phi}] for modulus {k}")
    factors = _unit_group(k)
    # j-1 in mixed radix over the factor orders, least significant first.
    digits = []
    rem = j - 1
    for _, _, order in factors:
        digits.append(rem % order)
        rem //= order
    exponents = [None] * k
    for n in range(k):
        if gcd(n, k) != 1:
            continue
        r = Fraction(0)
        for (q, g, order), c in zip(factors, digits):
            m = _dlog(n % q, q, g, order)
            r += Fraction(c * m, order)
        exponents[n] = r % 1
    if k == 1:
        exponents = [Fraction(0)]
    return DirichletCharacter(k, tuple(exponents), index=j)


def build_character_from_values(k: int, values) -> DirichletCharacter:
    """Validated character from a table of k values chi(1..k) (or chi(0..k-1)).

    Values may be exact exponent Fractions (None/0 for zero), strings in the
    import format ('0', '1', '-1', 'e(p/q)'), or complex numbers matched to
    the nearest phi(k)-th root of unity.
    """
    if len(values) != k:
        raise CharacterError("need exactly k values")
    phi = euler_phi(k)
    exponents = [None] * k
    # Accept the natural ordering chi(1), ..., chi(k): entry i is chi(i+1).
    for i, v in enumerate(values):
        n = (i + 1) % k
        exponents[n] = _to_exponent(v, phi)
    return DirichletCharacter(k, tuple(exponents))


_E_RE = re.compile(r"^e\((-?\d+)/(\d+)\)$")


def _to_exponent(v, phi: int):
    if v is None:
        return None
    if isinstance(v, str):
        v = v.strip()
        if v == "0":
            return None
        if v == "1":
            return Fraction(0)
        if v == "-1":
            return Fraction(1, 2)
        m = _E_RE.match(v)
        if m:
            return Fraction(int(m.group(1)), int(m.group(2))) % 1
        raise CharacterError(f"cannot parse character value {v!r}")
    if isinstance(v, Fraction):
        return v % 1
    if isinstance(v, int):
        if v == 0:
            return None
        if v == 1:
            return Fraction(0)
        if v == -1:
            return Fraction(1, 2)
        raise CharacterError(f"integer value {v} is not a root of unity")
    z = complex(v)
    if abs(z) < 1e-9:
        return None
    best, besterr = None, 1e9
    for m in range(phi):
        from cmath import exp, pi
        err = abs(z - exp(2j * pi * m / phi))
        if err < besterr:
            best, besterr = Fraction(m, phi), err
    if besterr > 1e-6:
        raise CharacterError(f"value {z} is not a phi(k)-th root of unity")
    return best % 1


def parse_character_file(text: str):
    """Parse the plain-text table format: one 'n,value' pair per line.

    Values use '0', '1', '-1' or 'e(p/q)' for e^{2 pi i p/q}.  Returns
    (k, values) where k = max n and values lists chi(1..k).
    """
    entries = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            n_str, val = line.split(",", 1)
            n = int(n_str)
        except ValueError as exc:
            raise CharacterError(f"line {lineno}: expected 'n,value'") from exc
        entries[n] = val.strip()
    if not entries:
        raise CharacterError("empty character table")
    k = max(entries)
    if sorted(entries) != list(range(1, k + 1)):
        raise CharacterError("table must cover n = 1..k without gaps")
    return k, [entries[n] for n in range(1, k + 1)]


def gauss_sum(chi: DirichletCharacter, P: int = 30):
    """G(chi) = sum_{m=1..k} chi(m) e^{2 pi i m / k}; |G|^2 = k for primitive chi."""
    k = chi.modulus
    with mp.workdps(P + GUARD_DIGITS):
        total = mpc(0)
        for m in range(1, k + 1):
            r = chi.exponent(m)
            if r is None:
                continue
            total += mp.expjpi(2 * (mpf(r.numerator) / r.denominator + mpf(m) / k))
        return +total
