"""Exact scalar fields: Q(i) for concrete parameters, Q(alpha, eps) for formal ones.

A *scalar* is either a :class:`GaussianRational` or a
:class:`RationalFunction`; an algebra lives entirely in one of the two
modes.  Python ints and Fractions mix freely with both.
"""

from fractions import Fraction

from .errors import DenominatorVanishesError, ModeMismatchError
from .gaussian import I, GaussianRational, is_integer_reciprocal
from .poly import BivariatePolynomial, poly_gcd
from .ratfunc import ALPHA, EPS, RationalFunction

Rational = Fraction

GAUSSIAN = "gaussian"
SYMBOLIC = "symbolic"
MODES = (GAUSSIAN, SYMBOLIC)


def mode_of(x) -> str:
    if isinstance(x, RationalFunction):
        return SYMBOLIC
    if isinstance(x, (GaussianRational, int, Fraction)):
        return GAUSSIAN
    raise TypeError(f"not a scalar: {x!r}")


def as_scalar(x, mode: str = GAUSSIAN):
    """Coerce ints, Fractions and scalars into the requested field."""
    if mode == GAUSSIAN:
        return GaussianRational.coerce(x)
    if mode == SYMBOLIC:
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, (int, Fraction)):
            return RationalFunction.constant(x)
        if isinstance(x, GaussianRational):
            if x.is_real():
                return RationalFunction.constant(x.re)
            raise ModeMismatchError("Q(i) value with nonzero imaginary part in symbolic mode")
        raise TypeError(f"not a scalar: {x!r}")
    raise ValueError(f"unknown field mode {mode!r}")


def zero(mode: str = GAUSSIAN):
    return as_scalar(0, mode)


def one(mode: str = GAUSSIAN):
    return as_scalar(1, mode)


def is_zero(x) -> bool:
    if isinstance(x, (int, Fraction)):
        return x == 0
    return x.is_zero()


def inv(x):
    """Multiplicative inverse; ZeroDivisionError on zero."""
    if isinstance(x, (int, Fraction)):
        return GaussianRational.coerce(x).inv()
    return x.inv()


def evaluate(x, alpha, eps) -> GaussianRational:
    """Substitute concrete alpha, eps into a scalar (identity on Q(i))."""
    if isinstance(x, RationalFunction):
        return x.evaluate(alpha, eps)
    return GaussianRational.coerce(x)


def to_literal(x) -> str:
    if isinstance(x, (int, Fraction)):
        x = GaussianRational.coerce(x)
    return str(x)


__all__ = [
    "ALPHA",
    "EPS",
    "GAUSSIAN",
    "I",
    "MODES",
    "SYMBOLIC",
    "BivariatePolynomial",
    "DenominatorVanishesError",
    "GaussianRational",
    "ModeMismatchError",
    "Rational",
    "RationalFunction",
    "as_scalar",
    "evaluate",
    "inv",
    "is_integer_reciprocal",
    "is_zero",
    "mode_of",
    "one",
    "poly_gcd",
    "to_literal",
    "zero",
]
