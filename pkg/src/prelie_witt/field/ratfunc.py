"""The rational function field Q(alpha, eps)."""

from __future__ import annotations

from fractions import Fraction

from .errors import DenominatorVanishesError, ModeMismatchError
from .gaussian import GaussianRational
from .poly import BivariatePolynomial, format_poly, poly_gcd

_ONE = BivariatePolynomial.constant(1)


class RationalFunction:
    """Canonical fraction ``num/den`` of bivariate polynomials.

    The denominator is primitive with positive leading coefficient (grlex,
    alpha > eps) and shares no factor with the numerator, so structural
    equality is field equality.
    """

    __slots__ = ("num", "den", "_hash")

    is_symbolic = True

    def __init__(self, num, den=None):
        num = _lift(num)
        den = _ONE if den is None else _lift(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        n, d = _canonical(num, den)
        self.num = n
        self.den = d
        self._hash = None

    @classmethod
    def _wrap(cls, num, den):
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def alpha(cls) -> RationalFunction:
        return cls._wrap(BivariatePolynomial.alpha(), _ONE)

    @classmethod
    def eps(cls) -> RationalFunction:
        return cls._wrap(BivariatePolynomial.eps(), _ONE)

    @classmethod
    def constant(cls, c) -> RationalFunction:
        return cls._wrap(BivariatePolynomial.constant(c), _ONE)

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("rational function is not constant")
        return self.num.constant_value() / self.den.constant_value()

    # -- arithmetic -------------------------------------------------------

    def _other(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunction._wrap(BivariatePolynomial.constant(other), _ONE)
        if isinstance(other, GaussianRational):
            raise ModeMismatchError("cannot mix Q(i) and Q(alpha, eps) values")
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            return self
        if self.num.is_zero():
            return o
        if self.den == o.den:
            return _make(self.num + o.num, self.den)
        if o.den.is_constant() and self.den.is_constant():
            return _make(self.num * o.den + o.num * self.den, self.den * o.den)
        g = poly_gcd(self.den, o.den)
        d1 = self.den.exact_div(g)
        d2 = o.den.exact_div(g)
        return _make(self.num * d2 + o.num * d1, self.den * d2)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._wrap(-self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return RationalFunction._wrap(BivariatePolynomial(), _ONE)
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n = self.num.exact_div(g1) * o.num.exact_div(g2)
        d = self.den.exact_div(g2) * o.den.exact_div(g1)
        return _make(n, d, reduced=True)

    __rmul__ = __mul__

    def inv(self) -> RationalFunction:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return _make(self.den, self.num, reduced=True)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        return RationalFunction._wrap(self.num ** k, self.den ** k)

    # -- evaluation -------------------------------------------------------

    def evaluate(self, alpha, eps) -> GaussianRational:
        """Substitute Gaussian-rational values for alpha and eps."""
        a = GaussianRational.coerce(alpha)
        e = GaussianRational.coerce(eps)
        d = GaussianRational.coerce(self.den.evaluate(a, e))
        if d.is_zero():
            raise DenominatorVanishesError(
                f"denominator {format_poly(self.den)} vanishes at alpha={a}, eps={e}",
                point=(a, e),
            )
        return GaussianRational.coerce(self.num.evaluate(a, e)) / d

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.den == _ONE and self.num == BivariatePolynomial.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        return to_literal(self)


def _lift(x) -> BivariatePolynomial:
    if isinstance(x, BivariatePolynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return BivariatePolynomial.constant(x)
    raise TypeError(f"cannot lift {x!r} to a polynomial")


def _canonical(num, den):
    if num.is_zero():
        return num, _ONE
    g = poly_gcd(num, den)
    if not (g.is_constant()):
        num = num.exact_div(g)
        den = den.exact_div(g)
    c = den.content()
    return num.scale(1 / c), den.scale(1 / c)


def _make(num, den, reduced=False) -> RationalFunction:
    if num.is_zero():
        return RationalFunction._wrap(num, _ONE)
    if not reduced and not den.is_constant():
        g = poly_gcd(num, den)
        if not g.is_constant():
            num = num.exact_div(g)
            den = den.exact_div(g)
    c = den.content()
    if c != 1:
        num, den = num.scale(1 / c), den.scale(1 / c)
    return RationalFunction._wrap(num, den)


def to_literal(x: RationalFunction) -> str:
    """Canonical symbolic literal, parseable by the CLI grammar."""
    if x.den == _ONE:
        return format_poly(x.num)
    num = format_poly(x.num)
    if len(x.num.terms) > 1:
        num = f"({num})"
    return f"{num}/({format_poly(x.den)})"


ALPHA = RationalFunction.alpha()
EPS = RationalFunction.eps()
