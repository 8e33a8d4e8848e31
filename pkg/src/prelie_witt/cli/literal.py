"""Scalar literals for the command line and table files.

Q(i) literals look like ``3/4``, ``-2+1/3i`` or ``0+1i``; the shorthands
``i``, ``-i`` and ``2/3i`` are accepted as well.  Symbolic literals are
arithmetic expressions in ``alpha`` and ``eps``::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ["^" ["-"] INT]
    atom   := INT | "alpha" | "eps" | "(" expr ")"

Whitespace is ignored everywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..field import ALPHA, EPS, GAUSSIAN, SYMBOLIC, GaussianRational, RationalFunction


class LiteralError(ValueError):
    pass


_RAT = r"\d+(?:/\d+)?"
_GAUSS = re.compile(rf"(?P<re>[+-]?{_RAT})(?:(?P<sign>[+-])(?P<im>{_RAT})?i)?")
_IMAG = re.compile(rf"(?P<im>[+-]?(?:{_RAT})?)i")


def _rat(text: str) -> Fraction:
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise LiteralError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def parse_gaussian(text: str) -> GaussianRational:
    s = "".join(text.split())
    m = _GAUSS.fullmatch(s)
    if m:
        re_part = _rat(m["re"])
        if m["sign"] is None:
            return GaussianRational(re_part)
        im = _rat(m["im"]) if m["im"] else Fraction(1)
        return GaussianRational(re_part, -im if m["sign"] == "-" else im)
    m = _IMAG.fullmatch(s)
    if m:
        body = m["im"]
        if body in ("", "+", "-"):
            body += "1"
        return GaussianRational(0, _rat(body.lstrip("+")))
    raise LiteralError(f"not a Q(i) literal: {text!r}")


_TOKEN = re.compile(r"\s*(?:(\d+)|(alpha|eps)|([-+*/^()]))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise LiteralError(f"unexpected character {text[pos:].lstrip()[:1]!r} in {text!r}")
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("int", int(num)))
        elif name is not None:
            tokens.append(("name", name))
        else:
            tokens.append(("op", op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind or "a token"
            raise LiteralError(f"expected {want} in {self.text!r}")
        self.pos += 1
        return tok

    def parse(self):
        if not self.tokens:
            raise LiteralError("empty expression")
        v = self.expr()
        if self.pos != len(self.tokens):
            raise LiteralError(f"trailing input {self.tokens[self.pos][1]!r} in {self.text!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            v = v + rhs if op == "+" else v - rhs
        return v

    def term(self):
        v = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.unary()
            if op == "*":
                v = v * rhs
            else:
                if rhs.is_zero():
                    raise LiteralError(f"division by zero in {self.text!r}")
                v = v / rhs
        return v

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            neg = False
            if self.peek() == ("op", "-"):
                self.take()
                neg = True
            k = self.take("int")[1]
            if neg:
                if base.is_zero():
                    raise LiteralError(f"zero to a negative power in {self.text!r}")
                return base.inv() ** k
            return base**k
        return base

    def atom(self):
        kind, value = self.peek()
        if kind == "int":
            self.take()
            return RationalFunction.constant(value)
        if kind == "name":
            self.take()
            return ALPHA if value == "alpha" else EPS
        if (kind, value) == ("op", "("):
            self.take()
            v = self.expr()
            self.take("op", ")")
            return v
        raise LiteralError(f"unexpected {value!r} in {self.text!r}" if kind else f"unexpected end of {self.text!r}")


def parse_symbolic(text: str) -> RationalFunction:
    return _Parser(text).parse()


def parse_scalar(text: str, mode: str = GAUSSIAN):
    if not isinstance(text, str):
        raise LiteralError(f"scalar literals are strings, got {type(text).__name__}")
    if mode == GAUSSIAN:
        return parse_gaussian(text)
    if mode == SYMBOLIC:
        return parse_symbolic(text)
    raise LiteralError(f"unknown field {mode!r}")
