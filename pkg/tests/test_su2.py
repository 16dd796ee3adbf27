"""SU(2) Witten L-function: special values, the derivative at s = -2,
multi-character variants, and the Haar average."""

import math
import random
from fractions import Fraction

import mpmath
import pytest

from wittenzeta.errors import DomainError
from wittenzeta.su2 import (ConjugacyClassSU2, char_ratio,
                            derivative_at_minus2, haar_average_su2, multi_L,
                            special_value_neg_even, witten_L_su2)

mpmath.mp.dps = 30

ZETA3 = 1.202056903159594285
CATALAN = 0.9159655941772190151
PI = math.pi


class TestConjugacyClass:
    def test_classification(self):
        assert ConjugacyClassSU2(0.0).is_identity
        assert ConjugacyClassSU2(PI).is_minus_identity
        assert ConjugacyClassSU2(1.0).is_regular

    def test_range(self):
        with pytest.raises(DomainError):
            ConjugacyClassSU2(-0.1)
        with pytest.raises(DomainError):
            ConjugacyClassSU2(PI + 0.1)

    def test_char_ratio(self):
        assert char_ratio(3, 0.0) == 1.0
        assert char_ratio(2, PI) == -1.0
        got = char_ratio(4, PI / 3)
        want = math.sin(4 * PI / 3) / (4 * math.sin(PI / 3))
        assert got == pytest.approx(want)


class TestEval:
    def test_identity_is_zeta(self):
        assert abs(witten_L_su2(2.0, 0.0) - PI ** 2 / 6.0) <= 1e-10

    def test_minus_identity_is_eta_twist(self):
        got = witten_L_su2(2.0, PI)
        want = (1.0 - 2.0 ** -1) * PI ** 2 / 6.0
        assert abs(got - want) <= 1e-10

    @pytest.mark.parametrize("s", [2.0, -0.5, 1.5 + 1.0j])
    @pytest.mark.parametrize("theta", [PI / 3, PI / 2, 2 * PI / 3])
    def test_regular_against_mpmath(self, s, theta):
        # direct sum of sin(n theta)/(n sin theta) n^{-s} via its polylog form
        x = mpmath.exp(1j * mpmath.mpf(theta))
        want = complex((mpmath.polylog(s + 1, x)
                        - mpmath.polylog(s + 1, 1 / x))
                       / (2j * mpmath.sin(theta)))
        got = witten_L_su2(s, theta)
        assert abs(got - want) <= 1e-8 * (1.0 + abs(want))


class TestSpecialValues:
    @pytest.mark.parametrize("theta,want", [
        (0.0, Fraction(-1, 12)),
        (PI / 3, Fraction(1)),
        (PI / 2, Fraction(1, 2)),
        (2 * PI / 3, Fraction(1, 3)),
        (PI, Fraction(1, 4)),
    ])
    def test_at_minus_one(self, theta, want):
        got = witten_L_su2(-1.0, theta)
        assert abs(got - float(want)) <= 1e-10
        if theta not in (0.0, PI):
            half = math.sin(theta / 2.0)
            assert float(want) == pytest.approx(1.0 / (4.0 * half * half))

    @pytest.mark.parametrize("m", [2, 4])
    @pytest.mark.parametrize("theta", [0.0, PI / 5, PI / 2, PI])
    def test_even_negative_zeros(self, m, theta):
        assert special_value_neg_even(m, theta) == 0
        assert abs(witten_L_su2(float(-m), theta)) <= 1e-9

    def test_special_value_rejects_odd(self):
        with pytest.raises(DomainError):
            special_value_neg_even(3, 0.5)


class TestDerivative:
    def test_three_anchors(self):
        assert derivative_at_minus2(0.0) == pytest.approx(
            -ZETA3 / (4 * PI ** 2), abs=1e-9)
        assert derivative_at_minus2(PI) == pytest.approx(
            7 * ZETA3 / (4 * PI ** 2), abs=1e-9)
        assert derivative_at_minus2(PI / 2) == pytest.approx(
            2 * CATALAN / PI, abs=1e-9)

    def test_positive_on_open_interval(self):
        for k in range(1, 51):
            assert derivative_at_minus2(k * PI / 51.0) > 0.0

    def test_continuity_at_pi(self):
        target = derivative_at_minus2(PI)
        gaps = [abs(derivative_at_minus2(PI - h) - target)
                for h in (0.1, 0.05, 0.025)]
        assert gaps[0] > gaps[1] > gaps[2]
        # at least linear convergence: halving h at least halves the gap
        assert gaps[1] <= 0.6 * gaps[0]
        assert gaps[2] <= 0.6 * gaps[1]

    def test_central_difference_oracle_at_pi(self):
        h = 1e-5

        def eta_zeta(s):
            return float((1 - mpmath.mpf(2) ** (1 - s)) * mpmath.zeta(s))

        fd = (eta_zeta(-2 + h) - eta_zeta(-2 - h)) / (2 * h)
        assert abs(derivative_at_minus2(PI) - fd) <= 1e-6

    def test_central_difference_oracle_regular(self):
        h = 1e-5
        theta = PI / 3
        fd = (witten_L_su2(-2 + h, theta).real
              - witten_L_su2(-2 - h, theta).real) / (2 * h)
        assert abs(derivative_at_minus2(theta) - fd) <= 1e-6


class TestMultiCharacter:
    def test_pairs_vanish_at_minus_two(self):
        rng = random.Random(20260824)
        pairs = [(rng.uniform(0.1, PI - 0.1), rng.uniform(0.1, PI - 0.1))
                 for _ in range(9)]
        pairs.append((1.1, 1.1))  # degenerate equal angles
        for t1, t2 in pairs:
            assert abs(multi_L(-2.0, [t1, t2])) <= 1e-10

    def test_triple_at_half_pi(self):
        got = multi_L(-2.0, [PI / 2, PI / 2, PI / 2])
        assert abs(got - PI / 4.0) <= 1e-10

    def test_identity_arguments_drop(self):
        got = multi_L(2.0, [PI / 3, 0.0])
        want = witten_L_su2(2.0, PI / 3)
        assert abs(got - want) <= 1e-10

    def test_single_matches_eval(self):
        got = multi_L(1.5, [PI / 5])
        want = witten_L_su2(1.5, PI / 5)
        assert abs(got - want) <= 1e-10

    def test_arity_limits(self):
        with pytest.raises(DomainError):
            multi_L(2.0, [])
        with pytest.raises(DomainError):
            multi_L(2.0, [0.5] * 4)


class TestHaarAverage:
    def test_values(self):
        assert abs(haar_average_su2(-1.0) - 1.0) <= 1e-8
        assert haar_average_su2(-2.0) == 0.0
        assert abs(haar_average_su2(3.0) - 1.0) <= 1e-8

    def test_untested_domain(self):
        with pytest.raises(DomainError):
            haar_average_su2(0.5)
