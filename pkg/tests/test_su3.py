"""SU(3) Witten zeta: the double series, its Mellin-Barnes continuation,
and exact special values at negative integers."""

import math
from fractions import Fraction

import pytest

from wittenzeta.errors import DomainError, PoleError
from wittenzeta.su3 import (MBParams, bernoulli_convolution_check, mt_series,
                            special_value_su3, special_value_terms,
                            witten_su3_continued)

F = Fraction

# high-precision truncation-extrapolated references for the double series
MT2 = 1.356457415970709
MT3 = 1.089207398030743


class TestSeries:
    def test_pinned_values(self):
        assert abs(mt_series(2.0) - MT2) <= 1e-8
        assert abs(mt_series(3.0) - MT3) <= 1e-9

    def test_domain(self):
        with pytest.raises(DomainError):
            mt_series(1.0)
        with pytest.raises(DomainError):
            mt_series(0.5 + 3.0j)

    def test_complex_argument(self):
        a = mt_series(2.0 + 0.5j)
        b = witten_su3_continued(2.0 + 0.5j)
        assert abs(a - b) <= 1e-6


class TestContinuation:
    @pytest.mark.parametrize("s", [2.0, 3.0, 1.5])
    def test_agrees_with_series(self, s):
        a = witten_su3_continued(s)
        b = mt_series(s)
        assert abs(a - b) <= 1e-6

    @pytest.mark.parametrize("s", [1.5, -0.4])
    def test_strip_independence(self, s):
        a = witten_su3_continued(s, MBParams(n=1))
        b = witten_su3_continued(s, MBParams(n=2))
        assert abs(a - b) <= 1e-6

    @pytest.mark.parametrize("s,n", [(2.0 / 3.0, 1), (0.5, 1), (-0.5, 1),
                                     (-1.5, 2)])
    def test_genuine_poles(self, s, n):
        with pytest.raises(PoleError):
            witten_su3_continued(s + 1e-9, MBParams(n=n))

    @pytest.mark.parametrize("s", [2.0, 1.0, 0.0, -1.0])
    def test_removable_integer_points_finite(self, s):
        val = witten_su3_continued(s)
        assert abs(val.imag) <= 1e-6
        if s < 0:
            # exact zero at the negative integers
            assert abs(val) <= 1e-5

    def test_strip_boundary(self):
        with pytest.raises(DomainError):
            witten_su3_continued(-1.3, MBParams(n=1))
        # same point is fine one strip further left
        witten_su3_continued(-1.3, MBParams(n=2))

    def test_params_validation(self):
        with pytest.raises(DomainError):
            MBParams(n=0)
        with pytest.raises(DomainError):
            MBParams(epsilon=1.5)


class TestSpecialValues:
    @pytest.mark.parametrize("n", range(1, 9))
    def test_exact_zeros(self, n):
        assert special_value_su3(n) == 0

    def test_odd_n_vanishes_termwise(self):
        for n in (1, 3, 5):
            assert special_value_terms(n) == (0, 0, 0)

    def test_even_n_cancels_nontrivially(self):
        for n in (2, 4, 6):
            t1, t2, t3 = special_value_terms(n)
            assert t1 != 0 and t2 != 0 and t3 != 0
            assert t1 + t2 + t3 == 0

    def test_requires_positive_n(self):
        with pytest.raises(DomainError):
            special_value_su3(0)


class TestBernoulliConvolution:
    @pytest.mark.parametrize("n", [2, 4, 6, 8, 10, 12])
    def test_identity(self, n):
        lhs, rhs = bernoulli_convolution_check(n)
        assert lhs == rhs

    def test_n2_intermediate_value(self):
        lhs, rhs = bernoulli_convolution_check(2)
        assert lhs == F(1, 14400)
        assert rhs == F(2, math.factorial(5)) * F(1, 240)

    def test_rejects_odd(self):
        with pytest.raises(DomainError):
            bernoulli_convolution_check(3)
