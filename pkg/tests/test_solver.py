import pytest
from mpmath import mp

from lzeros.characters import build_character
from lzeros.lfunctions import dh_family, dirichlet_family, zeta_family
from lzeros.numerics import DomainError, PrecisionPolicy
from lzeros.solver import (
    count_critical,
    count_strip,
    counting_point,
    equation_lhs,
    seed,
    solve_bulk_asymptotic,
    solve_zero,
)

import golden


@pytest.fixture(scope="module")
def zeta():
    return zeta_family()


@pytest.fixture(scope="module")
def chi72():
    return dirichlet_family(build_character(7, 2))


class TestSeeds:
    def test_zeta_first_seed(self, zeta):
        assert float(seed(zeta, 1, 20)) == pytest.approx(14.52, abs=0.005)

    def test_dirichlet_seeds(self, chi72):
        assert float(seed(chi72, 10, 20)) == pytest.approx(25.57, abs=0.005)
        assert float(seed(chi72, 0, 20)) == pytest.approx(-3.44, abs=0.005)

    def test_seed_monotone_in_n(self, zeta):
        values = [float(seed(zeta, n, 20)) for n in range(1, 40)]
        assert values == sorted(values)

    def test_zeta_rejects_nonpositive_n(self, zeta):
        with pytest.raises(DomainError):
            seed(zeta, 0, 20)


class TestSolve:
    def test_first_zero_to_thirty_digits(self, zeta):
        rec = solve_zero(zeta, 1, PrecisionPolicy.for_digits(30))
        with mp.workdps(50):
            want = mp.mpf(golden.ZETA_FIRST_FIVE[1])
            assert abs(mp.mpf(rec.ordinate_str) - want) < 1e-30
        assert rec.achieved_digits >= 30
        assert rec.residual < 1e-35

    def test_negative_index_dirichlet(self, chi72):
        rec = solve_zero(chi72, 0, PrecisionPolicy.for_digits(30))
        with mp.workdps(50):
            want = mp.mpf(golden.DIRICHLET_7_2[0])
            assert abs(mp.mpf(rec.ordinate_str) - want) < 1e-30

    def test_index_equation_vanishing_at_zero(self, zeta):
        # At the solved ordinate the index function equals n up to O(delta).
        rec = solve_zero(zeta, 3, PrecisionPolicy.for_digits(20))
        g = equation_lhs(zeta, rec.ordinate, 1e-4, "exact", 20)
        assert abs(float(g) - 3) < 0.01

    def test_asymptotic_mode_close_to_exact(self, zeta):
        rec = solve_zero(zeta, 2, PrecisionPolicy.for_digits(25),
                         mode="asymptotic")
        with mp.workdps(40):
            want = mp.mpf(golden.ZETA_ASYMPTOTIC_LOW[2])
            assert abs(mp.mpf(rec.ordinate_str) - want) < 1e-25


class TestCounting:
    def test_zeta_critical_count_at_100(self, zeta):
        n = count_critical(zeta, 100.5, P=20)
        assert abs(float(n) - 29) < 1e-6

    def test_strip_equals_critical_for_zeta(self, zeta):
        a = count_critical(zeta, 50.5, P=20)
        b = count_strip(zeta, 50.5, P=20)
        assert abs(float(a - b)) < 1e-10

    def test_counting_point_fields(self, zeta):
        p = counting_point(zeta, 30.5, P=20)
        assert p.T == pytest.approx(30.5)
        assert abs(p.n_critical - round(p.n_critical)) < 1e-4

    def test_staircase_jump_across_first_zero(self, zeta):
        t1 = 14.134725141734694
        below = count_critical(zeta, t1 - 1e-4, P=20)
        above = count_critical(zeta, t1 + 1e-4, P=20)
        assert round(float(above - below)) == 1

    def test_dirichlet_lower_count(self, chi72):
        # Ten zeros lie in (-25.5, 0): the labels n = 0, -1, ..., -9.
        n = count_critical(chi72, 25.5, side="lower", P=20)
        assert abs(float(n) - 10) < 0.01

    def test_rejects_nonpositive_height(self, zeta):
        with pytest.raises(DomainError):
            count_critical(zeta, -3.0)


class TestBulkAsymptotic:
    def test_matches_reference_at_low_n(self, zeta):
        zeros = solve_bulk_asymptotic(zeta, 1, 10)
        assert len(zeros) == 10
        assert zeros[0] == pytest.approx(
            float(golden.ZETA_ASYMPTOTIC[1]), abs=1e-8)
        assert zeros[9] == pytest.approx(
            float(golden.ZETA_ASYMPTOTIC[10]), abs=1e-8)

    def test_strictly_increasing(self, zeta):
        zeros = solve_bulk_asymptotic(zeta, 50, 150)
        assert all(b > a for a, b in zip(zeros, zeros[1:]))


class TestDavenportHeilbronnGap:
    def test_gap_indices_unreachable(self):
        # The index function jumps past the levels 44 and 45, so solving
        # either index must raise rather than silently return a neighbor.
        from lzeros.solver import GapDetected
        fam = dh_family()
        with pytest.raises(GapDetected):
            solve_zero(fam, 44, PrecisionPolicy.for_digits(15))

    def test_second_off_line_pair_skips_levels_64_and_65(self):
        # Besides the well-known pair near t = 85.7, the function has a
        # second off-critical-line zero near s = 0.6508 + 114.1633i; the
        # index staircase therefore also skips the levels 64 and 65.
        from lzeros.solver import GapReport, scan_gaps
        fam = dh_family()
        results = scan_gaps(fam, range(1, 101), PrecisionPolicy.for_digits(15))
        skipped = {r.n for r in results if isinstance(r, GapReport)}
        assert skipped == {44, 45, 64, 65}
        with mp.workdps(40):
            s = mp.findroot(lambda z: fam.eval(z, 40), mp.mpc("0.65", "114.16"))
            assert abs(mp.re(s) - mp.mpf("0.650830080609737")) < mp.mpf("1e-12")
            assert abs(mp.im(s) - mp.mpf("114.163342730757")) < mp.mpf("1e-11")
            assert abs(fam.eval(s, 40)) < mp.mpf("1e-25")
