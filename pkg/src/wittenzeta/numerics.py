"""Floating-point special-function kernel: complex Riemann zeta, Hurwitz
zeta, and log-gamma, with an explicit precision budget.

All three are implemented from scratch (Euler-Maclaurin summation and a
shifted Stirling series) rather than wrapping a library, so the test suite
can check them against independent oracles. The tested domain is
|Im s| <= 50, -40 <= Re s <= 40 for the zetas and |z| <= 100 off the
negative-real branch cut for log-gamma.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import ConvergenceError, DomainError, PoleError
from .exact import bernoulli

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class PrecisionBudget:
    """Target relative error plus hard caps on the work spent reaching it."""

    target: float = 1e-10
    max_terms: int = 10_000
    em_order: int = 8  # starting Euler-Maclaurin correction order (even)

    def __post_init__(self):
        if not self.target > 0:
            raise ValueError("precision target must be positive")
        if self.max_terms < 16:
            raise ValueError("max_terms must be at least 16")
        if self.em_order < 2 or self.em_order % 2:
            raise ValueError("em_order must be even and >= 2")


DEFAULT_BUDGET = PrecisionBudget()

# Bernoulli numbers as floats, B_2 .. B_100, for Stirling / Euler-Maclaurin.
_BFLOAT = {k: float(bernoulli(k)) for k in range(2, 102, 2)}


# ---------------------------------------------------------------------------
# log-gamma
# ---------------------------------------------------------------------------

_STIRLING_SHIFT = 12.0
_STIRLING_TERMS = 10


def _stirling_log_gamma(w: complex) -> complex:
    acc = (w - 0.5) * cmath.log(w) - w + 0.5 * math.log(_TWO_PI)
    winv2 = 1.0 / (w * w)
    pw = 1.0 / w
    for j in range(1, _STIRLING_TERMS + 1):
        acc += _BFLOAT[2 * j] / (2 * j * (2 * j - 1)) * pw
        pw *= winv2
    return acc


def log_gamma(z: complex) -> complex:
    """Principal-branch log Gamma via a shifted Stirling series.

    Uses the reflection formula for Re z < 0.5; poles at non-positive
    integers raise PoleError.
    """
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0 and abs(z.real - round(z.real)) < 1e-12:
        raise PoleError(f"log_gamma pole at z = {z}", location=z)
    if z.real < 0.5:
        # log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
        return math.log(math.pi) - cmath.log(cmath.sin(math.pi * z)) \
            - log_gamma(1.0 - z)
    w = z
    shift = 0.0 + 0.0j
    while abs(w) < _STIRLING_SHIFT:
        shift += cmath.log(w)
        w += 1.0
    return _stirling_log_gamma(w) - shift


def rgamma_real(s: float) -> float:
    """1/Gamma(s) for real s, zero at non-positive integers."""
    if s > 0.0:
        return math.exp(-log_gamma(s).real)
    # 1/Gamma(s) = sin(pi s) Gamma(1-s) / pi
    return math.sin(math.pi * s) * math.exp(log_gamma(1.0 - s).real) / math.pi


def gamma_ratio_at_neg(n: int) -> Fraction:
    """Exact limit of Gamma(2s-1)/Gamma(s) at s = -n for n >= 1."""
    if n < 1:
        raise ValueError("gamma_ratio_at_neg: n must be >= 1")
    return Fraction((-1) ** (n - 1) * factorial(n), 2 * factorial(2 * n + 1))


# ---------------------------------------------------------------------------
# Hurwitz and Riemann zeta by Euler-Maclaurin
# ---------------------------------------------------------------------------

def _hurwitz_em(s: complex, a: float, budget: PrecisionBudget) -> complex:
    """Euler-Maclaurin evaluation of zeta(s, a), valid for Re s >= -40.

    N explicit terms, the integral term, the half term, and adaptive
    Bernoulli corrections; N is doubled if the corrections fail to decay.
    """
    tol = budget.target
    n_split = max(16, math.ceil(abs(s)) + 8)
    while True:
        head = 0.0 + 0.0j
        for n in range(n_split):
            head += (n + a) ** (-s)
        base = n_split + a
        tail = base ** (1.0 - s) / (s - 1.0) + 0.5 * base ** (-s)
        # Bernoulli corrections: B_{2j}/(2j)! * (s)_{2j-1} * base^{-s-2j+1}
        corr = 0.0 + 0.0j
        risefac = s  # (s)_1
        power = base ** (-s - 1.0)
        prev_mag = math.inf
        converged = False
        scale = abs(head + tail) + 1.0
        j = 1
        while 2 * j <= 100:
            term = _BFLOAT[2 * j] / factorial(2 * j) * risefac * power
            mag = abs(term)
            if mag > prev_mag and j * 2 > budget.em_order:
                break  # asymptotic series started diverging
            corr += term
            if mag <= tol * scale * 0.01:
                converged = True
                break
            prev_mag = mag
            risefac *= (s + 2 * j - 1) * (s + 2 * j)
            power /= base * base
            j += 1
        if converged:
            return head + tail + corr
        if 2 * n_split > budget.max_terms:
            raise ConvergenceError(
                f"hurwitz zeta did not converge for s={s}, a={a}",
                achieved=head + tail + corr)
        n_split *= 2


def hurwitz_zeta(s: complex, a: float,
                 budget: PrecisionBudget = DEFAULT_BUDGET) -> complex:
    """Hurwitz zeta(s, a) for 0 < a <= 1, Re s >= -40, s != 1."""
    s = complex(s)
    if not 0.0 < a <= 1.0:
        raise DomainError("hurwitz_zeta requires 0 < a <= 1")
    if abs(s - 1.0) < 1e-13:
        raise PoleError("hurwitz zeta pole at s = 1", location=1.0)
    return _hurwitz_em(s, a, budget)


_RZ_CROSSOVER = 0.5  # switch to the functional equation left of this line


def riemann_zeta(s: complex,
                 budget: PrecisionBudget = DEFAULT_BUDGET) -> complex:
    """Riemann zeta(s) for s != 1.

    Euler-Maclaurin for Re s > 0.5, the functional equation (with log_gamma)
    otherwise; s = 0 returns the exact -1/2.
    """
    s = complex(s)
    if abs(s - 1.0) < 1e-13:
        raise PoleError("riemann zeta pole at s = 1", location=1.0)
    if s == 0:
        return complex(-0.5)
    if s.real > _RZ_CROSSOVER:
        return _hurwitz_em(s, 1.0, budget)
    # zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s)
    chi = 2.0 ** s * math.pi ** (s - 1.0) * cmath.sin(math.pi * s / 2.0) \
        * cmath.exp(log_gamma(1.0 - s))
    return chi * _hurwitz_em(1.0 - s, 1.0, budget)
