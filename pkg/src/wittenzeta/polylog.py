"""Polylogarithm Z(s, x) = sum x^n / n^s on the unit circle x = e^{i theta}.

Three evaluation routes are exposed and cross-checked by the tests:

* ``polylog_series``     -- the defining series, accelerated by repeated
                            summation by parts for 0 < Re s <= 1 (x != 1);
* ``polylog_continued``  -- the shift recursion that analytically continues
                            Z(s, x) to the whole s-plane for x != 1;
* ``polylog_via_jonquiere`` -- for real s, the functional equation relating
                            Z(s, e^{i theta}) and Z(s, e^{-i theta}) to the
                            Hurwitz zeta, solved as a 2x2 real system.

At non-positive integers ``polylog_closed_form`` produces the exact rational
function of x, and ``polylog_eval_neg`` evaluates it on the circle.
"""

from __future__ import annotations

import cmath
import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConditioningError, ConvergenceError, DomainError
from .exact import RationalFunction, binomial
from .numerics import (DEFAULT_BUDGET, PrecisionBudget, _hurwitz_em,
                       hurwitz_zeta, rgamma_real)

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class UnitCirclePoint:
    """Point x = e^{i theta} on the unit circle; theta stored in [0, 2 pi)."""

    theta: float

    def __post_init__(self):
        t = math.fmod(self.theta, _TWO_PI)
        if t < 0.0:
            t += _TWO_PI
        object.__setattr__(self, "theta", t)

    @property
    def x(self) -> complex:
        return cmath.exp(1j * self.theta)

    @property
    def is_one(self) -> bool:
        return self.theta == 0.0

    def inverse(self) -> "UnitCirclePoint":
        return UnitCirclePoint(-self.theta)


def _as_point(x) -> UnitCirclePoint:
    if isinstance(x, UnitCirclePoint):
        return x
    return UnitCirclePoint(float(x))


# ---------------------------------------------------------------------------
# Series evaluation
# ---------------------------------------------------------------------------

def _series_x1(s: complex, budget: PrecisionBudget) -> complex:
    if s.real <= 1.0:
        raise DomainError("series for x = 1 requires Re s > 1")
    return _hurwitz_em(s, 1.0, budget)


def _parts_depth(s: complex, e_mag: float) -> int:
    """Number of summation-by-parts passes; fewer when |x/(1-x)| is large,
    where the alternating differences would amplify rounding."""
    q = max(0, min(8, math.ceil(4.5 - s.real)))
    while q > 0 and (e_mag ** (q + 1)) * (4.0 ** q) * 1e-15 > 0.05:
        q -= 1
    return q


def polylog_series(s: complex, x, budget: PrecisionBudget = DEFAULT_BUDGET) -> complex:
    """Z(s, x) by direct summation.

    Requires Re s > 1 for x = 1 and Re s > 0 otherwise; the conditionally
    convergent region is handled by q-fold summation by parts, which turns
    the terms into q-th forward differences of n^{-s} (decay n^{-Re s - q}).
    """
    s = complex(s)
    pt = _as_point(x)
    if pt.is_one:
        return _series_x1(s, budget)
    if s.real <= 0.0:
        raise DomainError("polylog series requires Re s > 0 for x != 1")
    z = pt.x
    e = z / (1.0 - z)  # E in T(f) = E f(1) - E T(delta f)
    q = _parts_depth(s, abs(e))

    def f(n: float) -> complex:
        return n ** (-s)

    # boundary terms: sum_{j=0}^{q-1} (-1)^j E^{j+1} (delta^j f)(1)
    acc = 0.0 + 0.0j
    epow = e
    for j in range(q):
        dj = 0.0 + 0.0j
        for i in range(j + 1):
            dj += (-1.0) ** i * float(binomial(j, i)) * f(1.0 + i)
        acc += (-1.0) ** j * epow * dj
        epow *= e
    # remaining sum: (-1)^q E^q T(delta^q f)
    coefs = [(-1.0) ** i * float(binomial(q, i)) for i in range(q + 1)]
    sign_epow = (-e) ** q  # prefactor of the residual sum
    tail_tol = budget.target * 0.01
    partial = 0.0 + 0.0j
    phase = cmath.exp(1j * pt.theta)
    zn = 1.0 + 0.0j
    small_run = 0
    n = 1
    while n <= budget.max_terms:
        zn *= phase
        dq = 0.0 + 0.0j
        for i, c in enumerate(coefs):
            dq += c * f(float(n + i))
        term = zn * dq
        partial += term
        if abs(term) <= tail_tol * (1.0 + abs(acc + sign_epow * partial)):
            small_run += 1
            if small_run >= 3 and n >= 32:
                return acc + sign_epow * partial
        else:
            small_run = 0
        n += 1
    raise ConvergenceError(f"polylog series did not converge for s={s}",
                           achieved=acc + sign_epow * partial)


# ---------------------------------------------------------------------------
# Analytic continuation by the shift recursion
# ---------------------------------------------------------------------------

_SERIES_EDGE = 1.2  # use the plain series right of this line
_K_CAP = 64


def polylog_continued(s: complex, x,
                      budget: PrecisionBudget = DEFAULT_BUDGET) -> complex:
    """Z(s, x) for x != 1 and any s in the tested window.

    Builds the ladder Z(s + j, x), j = J..0, from the series in the
    absolutely convergent region downwards via
    (1-x) Z(s,x) = x + x^2 (2^{-s} - 1) + x sum_k C(-s,k) (Z(s+k,x) - x).
    """
    s = complex(s)
    pt = _as_point(x)
    if pt.is_one:
        raise DomainError("polylog continuation requires x != 1 (theta != 0)")
    if s.real > _SERIES_EDGE:
        return polylog_series(s, pt, budget)
    z = pt.x
    depth = math.ceil(_SERIES_EDGE - s.real) + 1
    top = depth + _K_CAP
    rung_budget = PrecisionBudget(
        target=max(budget.target * 1e-3, 1e-14),
        max_terms=max(budget.max_terms, 200_000),
        em_order=budget.em_order)
    vals: list[complex] = [0j] * (top + 1)
    for j in range(top, -1, -1):
        sj = s + j
        if sj.real > _SERIES_EDGE:
            vals[j] = polylog_series(sj, pt, rung_budget)
            continue
        acc = z + z * z * (2.0 ** (-sj) - 1.0)
        c = 1.0 + 0.0j  # C(-sj, k), built iteratively
        small_run = 0
        for k in range(1, _K_CAP + 1):
            c *= (-sj - (k - 1)) / k
            contrib = z * c * (vals[j + k] - z)
            acc += contrib
            if abs(contrib) <= budget.target * 1e-3 * (1.0 + abs(acc)) \
                    and k > abs(sj.real) + 4:
                small_run += 1
                if small_run >= 3:
                    break
            else:
                small_run = 0
        else:
            if small_run == 0:
                raise ConvergenceError(
                    f"continuation recursion not converged at s={sj}",
                    achieved=acc / (1.0 - z))
        vals[j] = acc / (1.0 - z)
    return vals[0]


# ---------------------------------------------------------------------------
# Jonquiere functional-equation route (real s)
# ---------------------------------------------------------------------------

def polylog_via_jonquiere(s: float, x,
                          budget: PrecisionBudget = DEFAULT_BUDGET) -> complex:
    """Z(s, x) for real s from the functional equation

        e^{-pi i s/2} Z(s, e^{i t}) + e^{pi i s/2} Z(s, e^{-i t})
            = (2 pi)^s / Gamma(s) * zeta(1 - s, t / 2 pi)

    applied at t and 2 pi - t, solved with Z(s, e^{-i t}) = conj Z(s, e^{i t}).
    Non-positive integer s uses the exact limit of the degenerate solve;
    positive integer s is rejected, near-integer s raises ConditioningError.
    """
    s = float(s)
    pt = _as_point(x)
    if pt.is_one:
        raise DomainError("jonquiere route requires theta != 0")
    t = pt.theta / _TWO_PI  # in (0, 1)
    if s == int(s):
        m = -int(s)
        if m < 0:
            raise DomainError("jonquiere solve degenerates at positive integer s")
        return _jonquiere_integer_limit(m, t, budget)
    if abs(math.sin(math.pi * s)) / 2.0 < 1e-4:
        raise ConditioningError(
            f"jonquiere system ill-conditioned near integer s = {s}")
    rg = rgamma_real(s)
    pref = _TWO_PI ** s * rg
    r_plus = pref * hurwitz_zeta(s_to_one_minus(s), t, budget).real
    r_minus = pref * hurwitz_zeta(s_to_one_minus(s), 1.0 - t, budget).real
    phi = math.pi * s / 2.0
    u = (r_plus + r_minus) / (4.0 * math.cos(phi))
    v = (r_plus - r_minus) / (4.0 * math.sin(phi))
    return complex(u, v)


def s_to_one_minus(s: float) -> float:
    return 1.0 - s


def _jonquiere_integer_limit(m: int, t: float,
                             budget: PrecisionBudget) -> complex:
    """Limit of the Jonquiere solve at s = -m, m >= 0.

    For m >= 1 both 1/Gamma(s) and the degenerate trigonometric factor
    vanish linearly; the ratio leaves a single Hurwitz-zeta combination and
    the conjugation parity forces the other component to zero.
    """
    if m == 0:
        # Z(0, x) = x / (1 - x)
        z = cmath.exp(1j * _TWO_PI * t)
        return z / (1.0 - z)
    num = _TWO_PI ** (-m) * (-1.0) ** m * math.factorial(m)
    zp = hurwitz_zeta(m + 1.0, t, budget).real
    zm = hurwitz_zeta(m + 1.0, 1.0 - t, budget).real
    if m % 2 == 1:
        u = num * (zp + zm) / (4.0 * (-1.0) ** ((m - 1) // 2) * math.pi / 2.0)
        return complex(u, 0.0)
    v = num * (zp - zm) / (4.0 * (-1.0) ** (m // 2) * math.pi / 2.0)
    return complex(0.0, v)


# ---------------------------------------------------------------------------
# Exact closed forms at non-positive integers
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def polylog_closed_form(m: int) -> RationalFunction:
    """Exact rational function R_m(x) with Z(-m, x) = R_m(x), from the
    recursion (1-x) Z(-m,x) = x + x^2 (2^m - 1) + x sum_k C(m,k)(R_{m-k} - x).
    """
    if m < 0:
        raise ValueError("polylog_closed_form: m must be non-negative")
    x = RationalFunction.variable("x")
    if m == 0:
        return x / (1 - x)
    rhs = x + x * x * (2 ** m - 1)
    for k in range(1, m + 1):
        rhs = rhs + x * Fraction(math.comb(m, k)) * (polylog_closed_form(m - k) - x)
    return rhs / (1 - x)


def polylog_eval_neg(m: int, x) -> complex:
    """Float evaluation of the exact closed form Z(-m, x) at x = e^{i theta}.

    Uses the factorization Z(-m, x) = x A(x) / (1 - x)^{m+1} with A the
    palindromic (Eulerian) numerator: on the circle this collapses to a real
    cosine sum over (-2i sin(theta/2))^{m+1}, so the value is exactly real
    for odd m and exactly imaginary for even m >= 2, as the parity identity
    Z(-m, x) + (-1)^m Z(-m, 1/x) = 0 demands.
    """
    if isinstance(x, UnitCirclePoint):
        th = x.theta
    else:
        th = math.fmod(float(x), _TWO_PI)  # fmod is exact
    if th == 0.0:
        raise DomainError("Z(-m, x) closed form requires x != 1")
    if th < 0.0:
        # Z(-m, conj x) = conj Z(-m, x); negation is exact, so reciprocal
        # angle pairs produce bit-exact conjugates and the parity identity
        # holds to the last ulp
        return polylog_eval_neg(m, -th).conjugate()
    if th > math.pi:
        return polylog_eval_neg(m, th - _TWO_PI)
    if m == 0:
        # x/(1-x) = -1/2 + (i/2) cot(theta/2)
        return complex(-0.5, 0.5 * math.cos(th / 2.0) / math.sin(th / 2.0))
    if m == 1:
        half = math.sin(th / 2.0)
        return complex(-0.25 / (half * half), 0.0)
    rf = polylog_closed_form(m)
    # num = (-1)^{m+1} x A(x) against the monic denominator (x - 1)^{m+1}
    sign = (-1.0) ** (m + 1)
    a = [sign * float(c) for c in rf.num.coeffs[1:]]
    center = (m - 1) / 2.0
    cosine = sum(c * math.cos((j - center) * th) for j, c in enumerate(a))
    denom = (-2j * math.sin(th / 2.0)) ** (m + 1)
    return cosine / denom
