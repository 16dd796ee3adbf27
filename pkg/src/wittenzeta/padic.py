"""Exact symbolic Witten zeta functions for p-adic group families.

Four families are cataloged:

* ``sl2zp``   -- SL_2(Z_p), p odd, as a dimension list (finite part Z_0 plus
                 a geometric infinite part Z_inf with prefactor 1/(1-p^{1-s}));
* ``sl2cong`` -- the level-p^m congruence subgroup of SL_2(Z_p), p odd:
                 p^{3m+2} (1 - p^{-2-s}) / (1 - p^{1-s});
* ``sl3cong`` -- congruence subgroups of SL_3(Z_p), p != 3;
* ``su3cong`` -- congruence subgroups of SU_3 over Z_p, p != 3;

the last two stored in factored form p^{8m} * products of (1 -+ p^E) and
short polynomial brackets over (1 - p^{1-2s})(1 - p^{2-3s}).

Everything here is exact: integer s with numeric p gives a Fraction, with
symbolic p a reduced RationalFunction in p. The "absolute limit" p -> 1 is
computed factor-wise and returns a RationalFunction in s.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConstraintError, DegenerateLimitError, DomainError, PoleError
from .exact import LaurentPoly2, Polynomial, RationalFunction

SYMBOLIC = "sym"


def _p_var() -> RationalFunction:
    return RationalFunction.variable("p")


def _is_symbolic(p) -> bool:
    return p is None or p == SYMBOLIC


def _p_power(e: int, p):
    """p^e as a RationalFunction (symbolic) or Fraction (numeric)."""
    if _is_symbolic(p):
        return _p_var() ** e
    return Fraction(p) ** e


@dataclass(frozen=True)
class AffineExponent:
    """Exponent a + b*m + c*s of p."""

    a: int
    b: int = 0
    c: int = 0

    def at(self, m: int, s: int) -> int:
        return self.a + self.b * m + self.c * s


@dataclass(frozen=True)
class PolyPart:
    """Sum of c_j * p^{E_j}."""

    terms: tuple  # of (Fraction, AffineExponent)

    def eval(self, m: int, s: int, p):
        acc = Fraction(0) if not _is_symbolic(p) else RationalFunction(0, 1, "p")
        for coeff, exp in self.terms:
            acc = acc + coeff * _p_power(exp.at(m, s), p)
        return acc

    def coeff_sum(self) -> Fraction:
        return sum((Fraction(c) for c, _ in self.terms), Fraction(0))

    def laurent(self) -> LaurentPoly2:
        acc = LaurentPoly2()
        for coeff, exp in self.terms:
            if exp.b:
                raise DomainError("m-dependent exponent in a Laurent bracket")
            acc = acc + LaurentPoly2.monomial(exp.a, -exp.c, coeff)
        return acc


@dataclass(frozen=True)
class FactorForm:
    """prefactor p^E times products of (1 - sign*p^E) and bracket polynomials,
    numerator over denominator."""

    prefactor: AffineExponent
    num_factors: tuple = ()  # of (sign, AffineExponent) meaning 1 - sign*p^E
    den_factors: tuple = ()
    num_polys: tuple = ()  # of PolyPart
    den_polys: tuple = ()

    def eval(self, m: int, s: int, p):
        for sign, exp in self.den_factors:
            if sign == 1 and exp.at(m, s) == 0:
                raise PoleError(
                    f"geometric factor (1 - p^{exp.at(m, s)}) vanishes at s={s}",
                    location=s)
        one = Fraction(1) if not _is_symbolic(p) \
            else RationalFunction(1, 1, "p")
        val = one * _p_power(self.prefactor.at(m, s), p)
        for sign, exp in self.num_factors:
            val = val * (one - sign * _p_power(exp.at(m, s), p))
        for part in self.num_polys:
            val = val * part.eval(m, s, p)
        for sign, exp in self.den_factors:
            val = val / (one - sign * _p_power(exp.at(m, s), p))
        for part in self.den_polys:
            val = val / part.eval(m, s, p)
        return val

    def numerator_laurent(self) -> LaurentPoly2:
        """Product of the numerator factors and brackets as a Laurent
        polynomial in (P, U) = (p, p^{-s}); the prefactor is excluded."""
        acc = LaurentPoly2.one()
        for sign, exp in self.num_factors:
            if exp.b:
                raise DomainError("m-dependent exponent in a Laurent factor")
            acc = acc * (LaurentPoly2.one()
                         - LaurentPoly2.monomial(exp.a, -exp.c, sign))
        for part in self.num_polys:
            acc = acc * part.laurent()
        return acc

    def absolute_limit(self) -> RationalFunction:
        """Formal limit p -> 1, factor-wise: p^E -> 1, (1 - p^{alpha + c s})
        -> -(alpha + c s), (1 + p^E) -> 2, brackets -> their coefficient sum.
        The vanishing-factor counts must match between numerator and
        denominator."""
        def side(factors, polys):
            lin = Polynomial.constant(1, "s")
            vanishing = 0
            for sign, exp in factors:
                if sign == 1:
                    if exp.b:
                        raise DegenerateLimitError(
                            "vanishing factor with level-dependent exponent")
                    lin = lin * Polynomial([-exp.a, -exp.c], "s")
                    vanishing += 1
                else:
                    lin = lin * 2
            for part in polys:
                c = part.coeff_sum()
                if c == 0:
                    raise DegenerateLimitError(
                        "bracket polynomial vanishes at p = 1")
                lin = lin * c
            return lin, vanishing
        num, nv = side(self.num_factors, self.num_polys)
        den, dv = side(self.den_factors, self.den_polys)
        if nv != dv:
            raise DegenerateLimitError(
                f"absolute limit is 0 or infinite: {nv} vanishing numerator "
                f"factors vs {dv} in the denominator")
        return RationalFunction(num, den, "s")


@dataclass(frozen=True)
class DimensionListForm:
    """Finite list of (multiplicity, dimension) pairs plus a geometric
    infinite part prefixed by 1/(1 - p^{1-s})."""

    finite_terms: tuple  # of (RationalFunction, RationalFunction) in p
    infinite_terms: tuple

    @staticmethod
    def _term_sum(terms, s: int, p):
        acc = Fraction(0) if not _is_symbolic(p) \
            else RationalFunction(0, 1, "p")
        for mult, dim in terms:
            if _is_symbolic(p):
                acc = acc + mult * dim ** (-s)
            else:
                pv = Fraction(p)
                acc = acc + mult(pv) * dim(pv) ** (-s)
        return acc

    def eval_finite(self, s: int, p):
        return self._term_sum(self.finite_terms, s, p)

    def eval_infinite(self, s: int, p):
        if s == 1:
            raise PoleError("geometric factor 1/(1 - p^{1-s}) at s = 1",
                            location=1)
        one = Fraction(1) if not _is_symbolic(p) \
            else RationalFunction(1, 1, "p")
        geo = one / (one - _p_power(1 - s, p))
        return geo * self._term_sum(self.infinite_terms, s, p)

    def eval(self, m: int, s: int, p):
        return self.eval_finite(s, p) + self.eval_infinite(s, p)


@dataclass(frozen=True)
class GroupFamily:
    key: str
    identifier: str
    excluded_p: frozenset
    uses_m: bool
    form: object  # FactorForm or DimensionListForm


def _rf(num, den=1) -> RationalFunction:
    return RationalFunction(Polynomial(num, "p"), Polynomial(den, "p")
                            if isinstance(den, (list, tuple)) else den, "p")


def _build_sl2zp() -> DimensionListForm:
    one = _rf([1])
    p = _rf([0, 1])
    half = Fraction(1, 2)
    finite = (
        (one, one),
        (_rf([2]), (p - 1) * half),
        (_rf([2]), (p + 1) * half),
        ((p - 1) * half, p - 1),
        (one, p),
        ((p - 3) * half, p + 1),
    )
    infinite = (
        (4 * p, (p * p - 1) * half),
        ((p * p - 1) * half, p * p - p),
        ((p - 1) * (p - 1) * half, p * p + p),
    )
    return DimensionListForm(finite_terms=finite, infinite_terms=infinite)


def _pp(*pairs) -> PolyPart:
    return PolyPart(tuple((Fraction(c), e) for c, e in pairs))


_E = AffineExponent

_SL2_CONG = FactorForm(
    prefactor=_E(2, 3, 0),
    num_factors=((1, _E(-2, 0, -1)),),
    den_factors=((1, _E(1, 0, -1)),),
)

_COMMON_DEN = ((1, _E(1, 0, -2)), (1, _E(2, 0, -3)))

_SL3_CONG = FactorForm(
    prefactor=_E(0, 8, 0),
    num_factors=((1, _E(-2, 0, -1)), (1, _E(-1, 0, -1))),
    num_polys=(_pp((1, _E(0, 0, 0)),
                   (1, _E(-1, 0, -1)), (1, _E(-2, 0, -1)),
                   (1, _E(0, 0, -2)), (1, _E(-1, 0, -2)),
                   (1, _E(-2, 0, -3))),),
    den_factors=_COMMON_DEN,
)

_SU3_CONG = FactorForm(
    prefactor=_E(0, 8, 0),
    num_factors=((1, _E(-2, 0, -1)), (1, _E(0, 0, -1)), (-1, _E(-1, 0, -1))),
    num_polys=(_pp((1, _E(0, 0, 0)),
                   (1, _E(0, 0, -1)), (-1, _E(-1, 0, -1)),
                   (1, _E(-2, 0, -1)),
                   (1, _E(-2, 0, -2))),),
    den_factors=_COMMON_DEN,
)

# u-form numerators 1 + u(p) p^{-3-2s} + u(1/p) p^{-2-3s} + p^{-5-5s},
# with u given by exponent -> coefficient maps.
U_POLY = {
    "sl3cong": {3: 1, 2: 1, 1: -1, 0: -1, -1: -1},
    "su3cong": {3: -1, 2: 1, 1: -1, 0: 1, -1: -1},
}

FAMILIES = {
    "sl2zp": GroupFamily("sl2zp", "SL2_ZP", frozenset({2}), False,
                         _build_sl2zp()),
    "sl2cong": GroupFamily("sl2cong", "SL2_CONG", frozenset({2}), True,
                           _SL2_CONG),
    "sl3cong": GroupFamily("sl3cong", "SL3_CONG", frozenset({3}), True,
                           _SL3_CONG),
    "su3cong": GroupFamily("su3cong", "SU3_CONG", frozenset({3}), True,
                           _SU3_CONG),
}


def _family(family) -> GroupFamily:
    if isinstance(family, GroupFamily):
        return family
    key = str(family).lower()
    if key not in FAMILIES:
        raise DomainError(
            f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    return FAMILIES[key]


def _check_p(fam: GroupFamily, p):
    if _is_symbolic(p):
        return
    q = Fraction(p)
    if q.denominator == 1 and int(q) in fam.excluded_p:
        raise ConstraintError(
            f"p = {int(q)} is excluded for family {fam.identifier}")
    if q <= 1:
        raise ConstraintError(f"numeric p must exceed 1, got {p}")


def eval_at_int_s(family, m: int, s: int, p=SYMBOLIC):
    """Exact value of the family's Witten zeta at integer s: a Fraction for
    numeric p, a reduced RationalFunction in p for symbolic p."""
    fam = _family(family)
    if fam.uses_m and m < 1:
        raise DomainError(f"family {fam.identifier} requires level m >= 1")
    if int(s) != s:
        raise DomainError("eval_at_int_s requires integer s")
    _check_p(fam, p)
    return fam.form.eval(int(m) if fam.uses_m else 0, int(s), p)


def verify_zero(family, m: int, s: int):
    """(is_zero, witness): whether the symbolic value vanishes identically,
    with the reduced rational function in p as witness."""
    w = eval_at_int_s(family, m, s, SYMBOLIC)
    return w.is_zero(), w


def absolute_limit(family, m: int = 1) -> RationalFunction:
    """The formal p -> 1 limit as a rational function of s (level m drops
    out). Only FactorForm families support it."""
    fam = _family(family)
    if not isinstance(fam.form, FactorForm):
        raise DomainError(
            f"absolute limit needs a factored representation; "
            f"{fam.identifier} is stored as a dimension list")
    return fam.form.absolute_limit()


def factorization_check(family, u=None):
    """Exact identity between the u-form numerator and the cataloged
    factored numerator, as Laurent polynomials in (p, p^{-s}).

    Returns (equal, difference); ``u`` overrides the exponent->coefficient
    map of the u polynomial (mutation testing)."""
    fam = _family(family)
    if fam.key not in U_POLY:
        raise DomainError(f"no u-form numerator cataloged for {fam.identifier}")
    umap = U_POLY[fam.key] if u is None else u
    uform = LaurentPoly2.one() + LaurentPoly2.monomial(-5, 5)
    for e, c in umap.items():
        uform = uform + LaurentPoly2.monomial(e - 3, 2, c)   # u(p) p^{-3-2s}
        uform = uform + LaurentPoly2.monomial(-e - 2, 3, c)  # u(1/p) p^{-2-3s}
    factored = fam.form.numerator_laurent()
    diff = uform - factored
    return diff.is_zero(), diff


def q_integer(n: int, p=SYMBOLIC):
    """[n]_p = (p^n - 1)/(p - 1) = 1 + p + ... + p^{n-1}."""
    if n < 1:
        raise DomainError("q_integer requires n >= 1")
    if _is_symbolic(p):
        return Polynomial([1] * n, "p")
    q = Fraction(p)
    if q == 1:
        return Fraction(n)
    return (q ** n - 1) / (q - 1)


def su3_cong_minus1(p=SYMBOLIC, m: int = 1):
    """The su3cong value at s = -1: -2 p^{8m-2} / [5]_p.

    The sign is forced by the cataloged formula (both its u-form and its
    factorization), matching the negativity of the sl2cong analogue
    -p^{3m+1}/(p+1)."""
    if m < 1:
        raise DomainError("su3_cong_minus1 requires m >= 1")
    if not _is_symbolic(p) and Fraction(p) == 1:
        raise DomainError("su3_cong_minus1 requires p != 1; use the limit")
    return -2 * _p_power(8 * m - 2, p) / q_integer(5, p)


def su3_cong_minus1_limit() -> Fraction:
    """p -> 1 limit of su3_cong_minus1 via the q-integer polynomial: -2/5."""
    return Fraction(-2) / q_integer(5, SYMBOLIC)(Fraction(1))


def sl2zp_z0(s: int, p=SYMBOLIC):
    """Finite part Z_0 of the sl2zp dimension list at integer s."""
    return FAMILIES["sl2zp"].form.eval_finite(int(s), p)


def sl2zp_zinf(s: int, p=SYMBOLIC):
    """Infinite part Z_inf of the sl2zp dimension list at integer s."""
    return FAMILIES["sl2zp"].form.eval_infinite(int(s), p)
