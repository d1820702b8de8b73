from mpmath import mp, mpc

from lzeros.specialfn import ThetaKind, log_gamma, theta, theta_asymptotic


class TestLogGamma:
    def test_matches_gamma_on_principal_strip(self):
        with mp.workdps(40):
            s = mpc(0.7, 0.3)
            assert abs(mp.exp(log_gamma(s, 30)) - mp.gamma(s)) < 1e-28

    def test_recurrence(self):
        with mp.workdps(40):
            s = mpc(0.25, 14.3)
            lhs = log_gamma(s + 1, 30)
            rhs = log_gamma(s, 30) + mp.log(s)
            assert abs(lhs - rhs) < 1e-27

    def test_continuous_in_t(self):
        # The imaginary part must not jump by 2 pi across small steps.
        with mp.workdps(30):
            prev = log_gamma(mpc(0.25, 10.0), 20).imag
            for i in range(1, 60):
                cur = log_gamma(mpc(0.25, 10.0 + i * 0.5), 20).imag
                assert abs(cur - prev) < 3.0
                prev = cur


class TestTheta:
    def test_riemann_siegel_reference_value(self):
        # theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi; check against
        # a direct high-precision evaluation.
        with mp.workdps(40):
            t = mp.mpf("14.1347251417346937904572519835624702707842")
            direct = (mp.loggamma(mp.mpf(1) / 4 + 0.5j * t).imag
                      - t / 2 * mp.log(mp.pi))
            assert abs(theta(ThetaKind.riemann_siegel(), t, 30) - direct) < 1e-28

    def test_theta_is_odd(self):
        with mp.workdps(30):
            for kind in (ThetaKind.riemann_siegel(),
                         ThetaKind.generalized(7, 1),
                         ThetaKind.modular(12)):
                a = theta(kind, mp.mpf(17.25), 20)
                b = theta(kind, mp.mpf(-17.25), 20)
                assert abs(a + b) < 1e-18

    def test_asymptotic_agrees_at_height(self):
        # The asymptotic form drops the O(1/t) Stirling correction, so the
        # error decays like c/t with c = 1/48 for the classical phase and a
        # larger weight-dependent constant for the modular one.
        with mp.workdps(30):
            for kind, c in ((ThetaKind.riemann_siegel(), 0.022),
                            (ThetaKind.generalized(7, 0), 0.022),
                            (ThetaKind.modular(12), 16.0)):
                err100 = abs(theta(kind, 100, 20)
                             - theta_asymptotic(kind, 100, 20))
                err1000 = abs(theta(kind, 1000, 20)
                              - theta_asymptotic(kind, 1000, 20))
                assert err100 < c / 100
                assert err1000 < err100 / 9

    def test_generalized_reduces_to_riemann_siegel_shape(self):
        # k=1, a=0 differs from the classical phase only through the
        # Gamma argument convention; both grow like (t/2) log t.
        with mp.workdps(30):
            t = mp.mpf(50)
            rs = theta(ThetaKind.riemann_siegel(), t, 20)
            gen = theta(ThetaKind.generalized(1, 0), t, 20)
            assert abs(rs - gen) < 1e-18
