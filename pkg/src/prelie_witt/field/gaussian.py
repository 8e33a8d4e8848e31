"""Exact complex numbers with rational real and imaginary parts."""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

from .errors import ModeMismatchError


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"not a rational: {x!r}")


class GaussianRational:
    """An element ``re + im*i`` of Q(i).

    Plain ``int`` and ``Fraction`` operands are promoted on the fly, so
    expressions like ``2 * z - 1`` work.  Mixing with a rational function
    raises :class:`ModeMismatchError`.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> GaussianRational:
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    @staticmethod
    def coerce(x) -> GaussianRational:
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Rational)):
            return GaussianRational._raw(Fraction(x), Fraction(0))
        if isinstance(x, complex):
            raise TypeError("floating-point complex values are not exact")
        if getattr(x, "is_symbolic", False):
            raise ModeMismatchError("cannot mix Q(i) and Q(alpha, eps) values")
        raise TypeError(f"cannot convert {x!r} to GaussianRational")

    # -- predicates -------------------------------------------------------

    is_symbolic = False

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def is_integer(self) -> bool:
        return not self.im and self.re.denominator == 1

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic -------------------------------------------------------

    def _other(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, int):
            return GaussianRational._raw(Fraction(other), Fraction(0))
        if isinstance(other, Fraction):
            return GaussianRational._raw(other, Fraction(0))
        if getattr(other, "is_symbolic", False):
            raise ModeMismatchError("cannot mix Q(i) and Q(alpha, eps) values")
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return GaussianRational._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return GaussianRational._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return GaussianRational._raw(o.re - self.re, o.im - self.im)

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, o.re, o.im
        if not b and not d:
            return GaussianRational._raw(a * c, b)
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> GaussianRational:
        return GaussianRational._raw(self.re, -self.im)

    def inv(self) -> GaussianRational:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if not self.im:
            return GaussianRational._raw(1 / self.re, self.im)
        n = self.norm()
        return GaussianRational._raw(self.re / n, -self.im / n)

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

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        result = GaussianRational._raw(Fraction(1), Fraction(0))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / hashing --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        return to_literal(self)

    # -- exact roots ------------------------------------------------------

    def sqrt(self) -> GaussianRational | None:
        """Exact square root in Q(i), or None when there is none.

        The root with positive real part (or positive imaginary part when
        the real part vanishes) is returned.
        """
        a, b = self.re, self.im
        if not a and not b:
            return self
        r = rational_sqrt(a * a + b * b)
        if r is None:
            return None
        x = rational_sqrt((a + r) / 2)
        y = rational_sqrt((r - a) / 2)
        if x is None or y is None:
            return None
        if b < 0:
            y = -y
        root = GaussianRational._raw(x, y)
        assert root * root == self
        return root


def rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    p, d = q.numerator, q.denominator
    sp, sd = math.isqrt(p), math.isqrt(d)
    if sp * sp != p or sd * sd != d:
        return None
    return Fraction(sp, sd)


def is_integer_reciprocal(x: GaussianRational) -> bool:
    """True iff ``x != 0`` and ``1/x`` is an integer."""
    x = GaussianRational.coerce(x)
    if x.is_zero():
        return False
    return x.inv().is_integer()


def to_literal(x: GaussianRational) -> str:
    """Canonical literal: ``3/4``, ``-2+1/3i``, ``0+1i``."""
    if not x.im:
        return str(x.re)
    sign = "-" if x.im < 0 else "+"
    return f"{x.re}{sign}{abs(x.im)}i"


I = GaussianRational(0, 1)
