"""Bivariate polynomials over Q in the indeterminates alpha and eps.

Terms are stored as ``{(deg_alpha, deg_eps): Fraction}`` with no zero
coefficients.  Monomials are ordered graded-lexicographically with
alpha > eps; the order only matters for normalization and division.

The gcd clears denominators and runs the heuristic integer gcd (evaluate,
take integer gcds, interpolate, confirm by division).  If that gives up,
a primitive pseudo-remainder sequence in alpha over Q[eps] is used.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce

Monomial = tuple  # (deg_alpha, deg_eps)


def _grlex(mono):
    return (mono[0] + mono[1], mono[0], mono[1])


class BivariatePolynomial:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[(int(mono[0]), int(mono[1]))] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> BivariatePolynomial:
        obj = object.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c) -> BivariatePolynomial:
        c = Fraction(c)
        return cls._wrap({(0, 0): c} if c else {})

    @classmethod
    def alpha(cls) -> BivariatePolynomial:
        return cls._wrap({(1, 0): Fraction(1)})

    @classmethod
    def eps(cls) -> BivariatePolynomial:
        return cls._wrap({(0, 1): Fraction(1)})

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0, 0) in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((0, 0), Fraction(0))

    def leading_monomial(self) -> Monomial:
        return max(self.terms, key=_grlex)

    def leading_coefficient(self) -> Fraction:
        return self.terms[self.leading_monomial()]

    def total_degree(self) -> int:
        return max((a + e for a, e in self.terms), default=-1)

    def degree_alpha(self) -> int:
        return max((a for a, _ in self.terms), default=-1)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return BivariatePolynomial._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial._wrap({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        if not self.terms or not other.terms:
            return BivariatePolynomial._wrap({})
        if len(other.terms) == 1 and (0, 0) in other.terms:
            return self.scale(other.terms[(0, 0)])
        if len(self.terms) == 1 and (0, 0) in self.terms:
            return other.scale(self.terms[(0, 0)])
        out = {}
        for (a1, e1), c1 in self.terms.items():
            for (a2, e2), c2 in other.terms.items():
                mono = (a1 + a2, e1 + e2)
                out[mono] = out.get(mono, 0) + c1 * c2
        return BivariatePolynomial._wrap({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c) -> BivariatePolynomial:
        c = Fraction(c)
        if not c:
            return BivariatePolynomial._wrap({})
        if c == 1:
            return self
        return BivariatePolynomial._wrap({m: v * c for m, v in self.terms.items()})

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = BivariatePolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, divisor: BivariatePolynomial):
        """Multivariate division by a single divisor (grlex order)."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lm = divisor.leading_monomial()
        lc = divisor.terms[lm]
        rem = dict(self.terms)
        quot = {}
        leftover = {}
        while rem:
            mono = max(rem, key=_grlex)
            c = rem[mono]
            if mono[0] >= lm[0] and mono[1] >= lm[1]:
                shift = (mono[0] - lm[0], mono[1] - lm[1])
                factor = c / lc
                quot[shift] = quot.get(shift, 0) + factor
                for (a, e), d in divisor.terms.items():
                    key = (a + shift[0], e + shift[1])
                    v = rem.get(key, 0) - factor * d
                    if v:
                        rem[key] = v
                    else:
                        rem.pop(key, None)
            else:
                leftover[mono] = c
                del rem[mono]
        return (
            BivariatePolynomial._wrap({m: c for m, c in quot.items() if c}),
            BivariatePolynomial._wrap(leftover),
        )

    def exact_div(self, divisor: BivariatePolynomial) -> BivariatePolynomial:
        q, r = self.divmod(divisor)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    # -- normalization ----------------------------------------------------

    def content(self) -> Fraction:
        """Rational c, signed like the leading coefficient, with self/c primitive over Z."""
        if not self.terms:
            return Fraction(0)
        coeffs = list(self.terms.values())
        den = reduce(lambda x, y: x * y // math.gcd(x, y), (c.denominator for c in coeffs))
        num = reduce(math.gcd, (abs(c.numerator) * (den // c.denominator) for c in coeffs))
        c = Fraction(num, den)
        return -c if self.leading_coefficient() < 0 else c

    def normalized(self) -> BivariatePolynomial:
        """Primitive integer coefficients, positive leading coefficient."""
        if not self.terms:
            return self
        return self.scale(1 / self.content())

    # -- evaluation -------------------------------------------------------

    def evaluate(self, alpha, eps):
        """Substitute values (anything supporting ``+``, ``*`` and ``**``)."""
        apow, epow = {}, {}
        total = 0
        for (a, e), c in self.terms.items():
            if a not in apow:
                apow[a] = alpha ** a
            if e not in epow:
                epow[e] = eps ** e
            total = total + apow[a] * epow[e] * c
        return total

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _grlex(t[0]), reverse=True)

    def __repr__(self):
        return f"BivariatePolynomial({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _as_poly(x):
    if isinstance(x, BivariatePolynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return BivariatePolynomial.constant(x)
    return None


def format_poly(p: BivariatePolynomial) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for (a, e), c in p.sorted_terms():
        factors = []
        if a:
            factors.append("alpha" if a == 1 else f"alpha^{a}")
        if e:
            factors.append("eps" if e == 1 else f"eps^{e}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


# -- univariate helpers in eps (coefficient lists, low degree first) ------


def _utrim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _udivmod(a, b):
    a = list(a)
    db = len(b) - 1
    lc = b[-1]
    q = [Fraction(0)] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        f = a[-1] / lc
        q[shift] = f
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        a.pop()
        _utrim(a)
    return _utrim(q), a


def _umonic(p):
    lc = p[-1]
    return [c / lc for c in p]


def _ugcd(a, b):
    a, b = _utrim(list(a)), _utrim(list(b))
    while b:
        _, r = _udivmod(a, b)
        a, b = b, r
    return _umonic(a) if a else a


def _umul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _utrim(out)


def _usub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _utrim([Fraction(c) for c in out])


def _uexact_div(a, b):
    q, r = _udivmod(a, b)
    assert not r, "univariate division not exact"
    return q


# -- Q[eps][alpha] view ---------------------------------------------------


def _to_recursive(p: BivariatePolynomial) -> dict:
    out: dict = {}
    for (a, e), c in p.terms.items():
        coeffs = out.setdefault(a, [])
        if len(coeffs) <= e:
            coeffs.extend([Fraction(0)] * (e + 1 - len(coeffs)))
        coeffs[e] = c
    return out


def _from_recursive(r: dict) -> BivariatePolynomial:
    terms = {}
    for a, coeffs in r.items():
        for e, c in enumerate(coeffs):
            if c:
                terms[(a, e)] = c
    return BivariatePolynomial._wrap(terms)


def _rdeg(r: dict) -> int:
    return max(r) if r else -1


def _rcontent(r: dict):
    return reduce(_ugcd, r.values())


def _rprimitive(r: dict):
    c = _rcontent(r)
    return {a: _uexact_div(v, c) for a, v in r.items()}


def _rprem(p: dict, q: dict) -> dict:
    dq = _rdeg(q)
    lcq = q[dq]
    rem = dict(p)
    while rem and _rdeg(rem) >= dq:
        d = _rdeg(rem)
        lcr = rem[d]
        new = {}
        for a, v in rem.items():
            new[a] = _umul(lcq, v)
        for a, v in q.items():
            key = a + d - dq
            new[key] = _usub(new.get(key, []), _umul(lcr, v))
        rem = {a: v for a, v in new.items() if v}
    return rem


# -- heuristic gcd over Z ---------------------------------------------------
#
# Polynomials here are dicts {exponent tuple: int}.  The last variable is
# evaluated at a large integer x, the gcd of the images is taken one level
# down, and the result is read back as balanced base-x digits.  Every
# candidate is confirmed by exact division, so a wrong guess is never
# returned; after a few failed evaluation points the caller falls back to
# the pseudo-remainder sequence.


class _HeuristicFailed(Exception):
    pass


def _zcontent(f: dict) -> int:
    return reduce(math.gcd, (abs(c) for c in f.values()))


def _zeval_last(f: dict, x: int) -> dict:
    out: dict = {}
    powers: dict = {}
    for mono, c in f.items():
        k = mono[-1]
        if k not in powers:
            powers[k] = x**k
        key = mono[:-1]
        out[key] = out.get(key, 0) + c * powers[k]
    return {m: c for m, c in out.items() if c}


def _zinterp(h: dict, x: int) -> dict:
    out = {}
    half = x // 2
    for mono, c in h.items():
        i = 0
        while c:
            r = c % x
            if r > half:
                r -= x
            if r:
                out[mono + (i,)] = r
            c = (c - r) // x
            i += 1
    return out


def _zprimitive(f: dict) -> dict:
    if not f:
        return f
    c = _zcontent(f)
    if f[max(f)] < 0:
        c = -c
    return {m: v // c for m, v in f.items()}


def _zdiv_exact(f: dict, h: dict):
    """f / h over Z in lex order, or None if h does not divide f."""
    if not h:
        return None
    lm = max(h)
    lc = h[lm]
    rem = dict(f)
    quot = {}
    while rem:
        mono = max(rem)
        c = rem[mono]
        if any(a < b for a, b in zip(mono, lm)) or c % lc:
            return None
        shift = tuple(a - b for a, b in zip(mono, lm))
        q = c // lc
        quot[shift] = q
        for hm, hc in h.items():
            key = tuple(a + b for a, b in zip(hm, shift))
            v = rem.get(key, 0) - q * hc
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    return quot


def _heu_gcd(f: dict, g: dict, nvars: int):
    """(h, f/h, g/h) for nonzero integer polynomials in nvars variables."""
    if nvars == 0:
        a, b = f.get((), 0), g.get((), 0)
        h = math.gcd(a, b)
        return {(): h}, {(): a // h}, {(): b // h}
    c = math.gcd(_zcontent(f), _zcontent(g))
    f = {m: v // c for m, v in f.items()}
    g = {m: v // c for m, v in g.items()}
    fn = max(abs(v) for v in f.values())
    gn = max(abs(v) for v in g.values())
    B = 2 * min(fn, gn) + 29
    x = max(min(B, 99 * math.isqrt(B)), 2 * min(fn // abs(f[max(f)]), gn // abs(g[max(g)])) + 2)
    for _ in range(6):
        ff, gg = _zeval_last(f, x), _zeval_last(g, x)
        if ff and gg:
            h0, cff0, cfg0 = _heu_gcd(ff, gg, nvars - 1)
            h = _zprimitive(_zinterp(h0, x))
            cff = _zdiv_exact(f, h)
            if cff is not None:
                cfg = _zdiv_exact(g, h)
                if cfg is not None:
                    return {m: v * c for m, v in h.items()}, cff, cfg
            for cof0, this, other in ((cff0, f, g), (cfg0, g, f)):
                cof = _zinterp(cof0, x)
                h = _zdiv_exact(this, cof) if cof else None
                if h:
                    cother = _zdiv_exact(other, h)
                    if cother is not None:
                        h = {m: v * c for m, v in h.items()}
                        if this is f:
                            return h, cof, cother
                        return h, cother, cof
        x = 73794 * x * math.isqrt(math.isqrt(x)) // 27011
    raise _HeuristicFailed


def _to_int_terms(p: BivariatePolynomial) -> dict:
    q = p.normalized()
    return {m: int(c) for m, c in q.terms.items()}


def poly_gcd(p: BivariatePolynomial, q: BivariatePolynomial) -> BivariatePolynomial:
    """Greatest common divisor, primitive with positive leading coefficient."""
    p, q = _as_poly(p), _as_poly(q)
    if p.is_zero():
        return q.normalized()
    if q.is_zero():
        return p.normalized()
    if p.is_constant() or q.is_constant():
        return BivariatePolynomial.constant(1)
    try:
        h, _, _ = _heu_gcd(_to_int_terms(p), _to_int_terms(q), 2)
        return BivariatePolynomial._wrap({m: Fraction(c) for m, c in h.items()}).normalized()
    except _HeuristicFailed:
        return _prs_gcd(p, q)


def _prs_gcd(p: BivariatePolynomial, q: BivariatePolynomial) -> BivariatePolynomial:
    """gcd via a primitive pseudo-remainder sequence in alpha over Q[eps]."""
    rp, rq = _to_recursive(p), _to_recursive(q)
    cont = _ugcd(_rcontent(rp), _rcontent(rq))
    rp, rq = _rprimitive(rp), _rprimitive(rq)
    if _rdeg(rp) < _rdeg(rq):
        rp, rq = rq, rp
    while rq:
        if _rdeg(rq) == 0:
            # primitive, alpha-free: a unit in Q[eps][alpha] after taking content
            rp = {0: [Fraction(1)]}
            break
        r = _rprem(rp, rq)
        rp, rq = rq, (_rprimitive(r) if r else {})
    g = {a: _umul(cont, v) for a, v in rp.items()}
    return _from_recursive(g).normalized()
