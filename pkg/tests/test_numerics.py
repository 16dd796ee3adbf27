"""Numeric kernels against mpmath as an independent oracle."""

import math
from fractions import Fraction

import mpmath
import pytest

from wittenzeta.errors import DomainError, PoleError
from wittenzeta.numerics import (DEFAULT_BUDGET, PrecisionBudget,
                                 gamma_ratio_at_neg, hurwitz_zeta, log_gamma,
                                 riemann_zeta)

mpmath.mp.dps = 30


def _mpc(z):
    return complex(z)


class TestPrecisionBudget:
    def test_defaults(self):
        assert DEFAULT_BUDGET.target == 1e-10

    def test_validation(self):
        with pytest.raises(ValueError):
            PrecisionBudget(target=0.0)
        with pytest.raises(ValueError):
            PrecisionBudget(max_terms=0)


class TestLogGamma:
    @pytest.mark.parametrize("z", [
        0.5, 1.0, 3.7, 12.5, -0.5, -3.3, -7.25,
        2.0 + 3.0j, -1.5 + 0.7j, 0.1 - 5.0j, 15.0 + 15.0j,
    ])
    def test_against_mpmath(self, z):
        # branch of the log may differ by 2 pi i on the reflected region,
        # so compare through the exponential
        import cmath
        got = cmath.exp(log_gamma(complex(z)))
        want = _mpc(mpmath.gamma(z))
        assert abs(got - want) <= 1e-10 * (1.0 + abs(want))

    def test_recurrence(self):
        import cmath
        for z in (0.3, 4.2, 1.5 + 2.0j, -2.7 + 0.1j):
            got = cmath.exp(log_gamma(complex(z) + 1) - log_gamma(complex(z)))
            assert abs(got - z) <= 1e-10 * (1.0 + abs(z))

    @pytest.mark.parametrize("z", [0.0, -1.0, -5.0])
    def test_poles(self, z):
        with pytest.raises(PoleError):
            log_gamma(complex(z))


class TestGammaRatioAtNeg:
    def test_exact_formula(self):
        assert gamma_ratio_at_neg(1) == Fraction(1, 12)
        assert gamma_ratio_at_neg(2) == Fraction(-1, 120)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_against_mpmath_limit(self, n):
        s = mpmath.mpf(-n) + mpmath.mpf("1e-12")
        approx = mpmath.gamma(2 * s - 1) / mpmath.gamma(s)
        assert abs(float(gamma_ratio_at_neg(n)) - float(approx)) <= 1e-8


class TestRiemannZeta:
    @pytest.mark.parametrize("s", [
        2.0, 3.5, 0.5, -0.5, -3.0, -9.5,
        1.5 + 2.0j, 0.25 + 10.0j, -2.5 + 1.0j, 0.5 + 14.0j,
    ])
    def test_against_mpmath(self, s):
        got = riemann_zeta(complex(s))
        want = _mpc(mpmath.zeta(s))
        assert abs(got - want) <= 1e-9 * (1.0 + abs(want))

    def test_exact_anchors(self):
        assert riemann_zeta(0.0) == -0.5
        assert abs(riemann_zeta(-2.0)) <= 1e-12
        assert abs(riemann_zeta(2.0) - math.pi ** 2 / 6.0) <= 1e-12

    def test_pole_at_one(self):
        with pytest.raises(PoleError):
            riemann_zeta(1.0)


class TestHurwitzZeta:
    @pytest.mark.parametrize("s,a", [
        (2.0, 0.25), (3.5, 0.5), (2.0, 1.0), (5.0, 0.1),
        (2.5 + 1.0j, 0.3), (4.0 - 2.0j, 0.75),
    ])
    def test_against_mpmath(self, s, a):
        got = hurwitz_zeta(complex(s), a)
        want = _mpc(mpmath.zeta(s, a))
        assert abs(got - want) <= 1e-9 * (1.0 + abs(want))

    def test_catalan_identity(self):
        # zeta(2, 1/4) = pi^2 + 8 G
        catalan = 0.9159655941772190151
        got = hurwitz_zeta(2.0, 0.25).real
        assert abs(got - (math.pi ** 2 + 8.0 * catalan)) <= 1e-10

    def test_domain(self):
        with pytest.raises(DomainError):
            hurwitz_zeta(2.0, 0.0)
        with pytest.raises(DomainError):
            hurwitz_zeta(2.0, 1.5)
