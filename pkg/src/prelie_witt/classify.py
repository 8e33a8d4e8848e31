"""Fitting tables to the known families, graded isomorphisms, basis rescaling.

Only two graded isomorphism shapes exist between these products: equality
of structure functions, and the flip ``x_n -> -x_{-n}`` which sends f to
``-f(-m, -n)``.  :func:`isomorphic` checks exactly these two.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .families import FamilyParams, InvalidParameterError, VAlphaEps, VBetaK, make_family
from .field import GAUSSIAN, GaussianRational, as_scalar, is_integer_reciprocal, is_zero
from .witt import ClosedForm, IndexWindow, StructureFunction, Table, structure_of


class Iso(enum.Enum):
    EQUAL = "equal"
    FLIP = "flip-isomorphic"
    NO = "not isomorphic"


class ScalingError(ValueError):
    """A basis scaling with a zero or missing coefficient."""


# -- flip and comparison ---------------------------------------------------


def flip(T) -> StructureFunction:
    """f'(m, n) = -f(-m, -n); tables stay tables on the same window."""
    f = structure_of(T)
    if isinstance(f, Table):
        return Table({(m, n): -f.entries[(-m, -n)] for m, n in f.entries}, f.window, f.mode)
    return ClosedForm(lambda m, n: -f(-m, -n), f.mode, label=f"flip({getattr(f, 'label', f)})")


def first_mismatch(T1, T2, w: IndexWindow):
    """First (m, n) in lexicographic order where the two differ, or None.

    A point where exactly one side fails to evaluate counts as a mismatch.
    """
    f1, f2 = structure_of(T1), structure_of(T2)
    for m, n in w.pairs():
        a = _try(f1, m, n)
        b = _try(f2, m, n)
        if isinstance(a, Exception) or isinstance(b, Exception):
            if not (isinstance(a, Exception) and isinstance(b, Exception)):
                return (m, n)
            continue
        if a != b:
            return (m, n)
    return None


def _try(f, m, n):
    try:
        return f(m, n)
    except (ArithmeticError, KeyError) as exc:
        return exc


def isomorphic(T1, T2, w: IndexWindow) -> Iso:
    if first_mismatch(T1, T2, w) is None:
        return Iso.EQUAL
    if first_mismatch(T1, flip(T2), w) is None:
        return Iso.FLIP
    return Iso.NO


# -- basis rescaling ---------------------------------------------------------


class BasisScaling:
    """y_i = c_i e_i."""

    def coefficient(self, i: int):
        raise NotImplementedError

    def __call__(self, i: int):
        c = self.coefficient(i)
        if is_zero(c):
            raise ScalingError(f"scaling coefficient c_{i} vanishes")
        return c


@dataclass(frozen=True)
class ConstantScaling(BasisScaling):
    c: object

    def coefficient(self, i):
        return as_scalar(self.c)


@dataclass(frozen=True)
class AffineScaling(BasisScaling):
    """c_i = c (1 + b i)."""

    b: object
    c: object = 1

    def coefficient(self, i):
        return as_scalar(self.c) * (1 + as_scalar(self.b) * i)


@dataclass(frozen=True)
class ReciprocalScaling(BasisScaling):
    """c_i = 1/a for every i."""

    a: object

    def coefficient(self, i):
        a = as_scalar(self.a)
        if a.is_zero():
            raise ScalingError("reciprocal scaling needs a != 0")
        return 1 / a


@dataclass(frozen=True)
class TableScaling(BasisScaling):
    entries: dict = field(hash=False)

    def coefficient(self, i):
        try:
            return as_scalar(self.entries[i])
        except KeyError:
            raise ScalingError(f"scaling has no coefficient for index {i}") from None


def rescale_basis(T, c: BasisScaling, w: IndexWindow) -> Table:
    """Structure table in the basis y_i = c_i e_i: f(m, n) c_m c_n / c_{m+n}."""
    f = structure_of(T)
    entries = {}
    for m, n in w.pairs():
        entries[(m, n)] = f(m, n) * c(m) * c(n) / c(m + n)
    return Table(entries, w, f.mode)


# -- fitting -----------------------------------------------------------------


@dataclass
class Fitted:
    params: FamilyParams
    residual_free: bool = True
    ambiguous: bool = False
    notes: list = field(default_factory=list)

    kind = "fitted"


@dataclass
class NoFit:
    witness: tuple | None
    notes: list = field(default_factory=list)

    kind = "nofit"


def _candidate(params, T, w):
    """Return (params, mismatch) or None when the parameters are invalid."""
    try:
        A = make_family(params)
    except (InvalidParameterError, ArithmeticError):
        return None
    return params, first_mismatch(A, T, w)


def _eps_candidates(alpha, F):
    out = [GaussianRational(0)]
    if alpha.is_zero():
        den = 1 - 2 * F
        if not den.is_zero():
            out.append((F - 1) / den)
        return out
    b = 2 * alpha + 1 - 2 * F
    c = alpha + 1 - F
    root = (b * b - 4 * alpha * c).sqrt()
    if root is None:
        return out
    for r in (root, -root):
        e = (-b + r) / (2 * alpha)
        if e not in out:
            out.append(e)
    return out


def fit_family(T, w: IndexWindow):
    """Probe a few entries, propose family parameters, then compare on all of w."""
    f = structure_of(T)
    if f.mode != GAUSSIAN:
        raise ValueError("fitting works over Q(i) only")
    notes = []
    alpha = as_scalar(f(0, 0))
    F = as_scalar(f(1, 1))

    tried = []
    for eps in _eps_candidates(alpha, F):
        if not eps.is_zero() and is_integer_reciprocal(eps):
            continue
        cand = _candidate(VAlphaEps(alpha, eps), f, w)
        if cand:
            tried.append(cand)

    if alpha.is_integer():
        k = int(alpha.re)
        nstar = 1 if 1 + k != 0 else 2
        if (-nstar - k) not in w:
            notes.append(f"V_beta_k candidate skipped: window N={w.N} too small for k={k}")
        else:
            c = as_scalar(f(-nstar - k, nstar))
            s = nstar + k
            if c != s:
                beta = (c * k - s * s) / (c - s)
                cand = _candidate(VBetaK(beta, k), f, w)
                if cand:
                    tried.append(cand)

    good = [p for p, miss in tried if miss is None]
    if good:
        kinds = {type(p) for p in good}
        ambiguous = VAlphaEps in kinds and VBetaK in kinds
        if ambiguous:
            notes.append("both families match on this window; reporting V_alpha_eps")
        return Fitted(good[0], True, ambiguous, notes)

    witness = None
    if tried:
        witness = max(tried, key=lambda t: _mismatch_order(t[1], w))[1]
    return NoFit(witness, notes)


def _mismatch_order(pt, w):
    # later first-mismatch means the candidate agreed on more of the window
    m, n = pt
    return (m + w.N) * len(w) + (n + w.N)


# -- isomorphism classes -----------------------------------------------------


def _equal_partners(p: FamilyParams) -> list:
    if isinstance(p, VAlphaEps):
        a, e = as_scalar(p.alpha), as_scalar(p.eps)
        if e.is_zero() and not a.is_zero() and not is_integer_reciprocal(1 / a):
            return [VAlphaEps(a, 1 / a)]
        if not e.is_zero() and a == 1 / e:
            return [VAlphaEps(a, 0)]
    return []


def _flip_partner(p: FamilyParams):
    if isinstance(p, VAlphaEps):
        return VAlphaEps(-as_scalar(p.alpha), -as_scalar(p.eps))
    if isinstance(p, VBetaK):
        return VBetaK(-as_scalar(p.beta), -p.k)
    return None


def isomorphism_orbit(p: FamilyParams, w: IndexWindow) -> list:
    """Other members of the class of p, as [(Iso, params)], each confirmed on w."""
    A = make_family(p)
    out = []
    candidates = [(Iso.EQUAL, q) for q in _equal_partners(p)]
    for q in [p] + [q for _, q in candidates]:
        fp = _flip_partner(q)
        if fp is not None:
            candidates.append((Iso.FLIP, fp))
    seen = {_key(p)}
    for rel, q in candidates:
        if _key(q) in seen:
            continue
        seen.add(_key(q))
        try:
            got = isomorphic(A, make_family(q), w)
        except InvalidParameterError:
            continue
        if got == rel:
            out.append((rel, q))
    return out


def _key(p: FamilyParams):
    return (type(p).__name__, p.describe())


def describe_orbit(p: FamilyParams, orbit: list) -> str:
    parts = [p.describe()]
    for rel, q in orbit:
        verb = "flip-isomorphic to" if rel is Iso.FLIP else "equal to"
        parts.append(f"{verb} {q.describe()}")
    return "; ".join(parts)
