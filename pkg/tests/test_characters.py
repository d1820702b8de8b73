from fractions import Fraction

import pytest
from mpmath import mp

from lzeros.characters import (
    CharacterError,
    build_character,
    build_character_from_values,
    euler_phi,
    gauss_sum,
    parse_character_file,
)


@pytest.fixture(autouse=True)
def _high_precision():
    # Character values are exact roots of unity; evaluate them with enough
    # working precision for the 1e-25 comparisons below.
    with mp.workdps(40):
        yield


class TestBuildCharacter:
    def test_multiplicativity(self):
        chi = build_character(7, 2)
        for m in range(1, 7):
            for n in range(1, 7):
                lhs = chi.value(m * n)
                rhs = chi.value(m) * chi.value(n)
                assert abs(lhs - rhs) < 1e-25

    def test_periodicity_and_zeros(self):
        chi = build_character(12, 1)
        for n in range(24):
            assert abs(chi.value(n) - chi.value(n + 12)) < 1e-25
            if n % 2 == 0 or n % 3 == 0:
                assert chi.is_zero(n)

    def test_index_enumeration_distinct(self):
        seen = set()
        for j in range(1, euler_phi(7) + 1):
            chi = build_character(7, j)
            seen.add(chi.exponents)
        assert len(seen) == 6

    def test_principal_character(self):
        chi = build_character(7, 1)
        assert chi.is_principal
        assert not build_character(7, 2).is_principal

    def test_parity(self):
        # chi(-1) = (-1)^a.
        for j in range(1, 7):
            chi = build_character(7, j)
            val = chi.value(7 - 1)
            expect = (-1) ** chi.order_a
            assert abs(val - expect) < 1e-25

    def test_conjugate(self):
        chi = build_character(7, 2)
        bar = chi.conjugate()
        for n in range(1, 7):
            assert abs(bar.value(n) - chi.value(n).conjugate()) < 1e-25


class TestGaussSum:
    @pytest.mark.parametrize("k,j", [(7, 2), (7, 3), (5, 2)])
    def test_modulus_for_primitive(self, k, j):
        chi = build_character(k, j)
        with mp.workdps(40):
            g = gauss_sum(chi, 30)
            assert abs(abs(g) - mp.sqrt(k)) < 1e-25


class TestImportFormats:
    def test_round_trip_from_values(self):
        chi = build_character(7, 2)
        values = [chi.value(n) for n in range(1, 8)]
        rebuilt = build_character_from_values(7, values)
        assert rebuilt.exponents == chi.exponents

    def test_parse_character_file(self):
        text = """
        # chi mod 4
        1, 1
        2, 0
        3, -1
        4, 0
        """
        k, values = parse_character_file(text)
        assert k == 4
        chi = build_character_from_values(k, values)
        assert chi.exponent(3) == Fraction(1, 2)
        assert chi.is_zero(2)

    def test_parse_exponent_notation(self):
        k, values = parse_character_file("1,1\n2,e(1/3)\n3,0\n")
        assert values[1] == "e(1/3)"

    def test_rejects_non_multiplicative_table(self):
        with pytest.raises(CharacterError):
            # chi(3)^2 != chi(9 mod 4 = 1).
            build_character_from_values(4, ["1", "0", "e(1/3)", "0"])

    def test_rejects_gapped_table(self):
        with pytest.raises(CharacterError):
            parse_character_file("1,1\n3,-1\n")
