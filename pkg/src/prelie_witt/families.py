"""Closed-form families of graded products and the weight modules behind them."""

from __future__ import annotations

from dataclasses import dataclass, field

from .field import (
    GAUSSIAN,
    SYMBOLIC,
    DenominatorVanishesError,
    RationalFunction,
    as_scalar,
    is_integer_reciprocal,
    is_zero,
    to_literal,
)
from .witt import ClosedForm, Defect, GradedLSA, IndexWindow, PointError, VerificationReport, structure_of


class InvalidParameterError(ValueError):
    """Family or module parameters violate a validity condition."""


class InvalidIndexError(ValueError):
    """A basis index that the module does not have."""


def _mode(*values) -> str:
    return SYMBOLIC if any(isinstance(v, RationalFunction) for v in values) else GAUSSIAN


def _bad_reciprocal(x) -> bool:
    """True when x is a concrete nonzero value whose inverse is an integer."""
    if isinstance(x, RationalFunction):
        if not x.is_constant():
            return False
        x = x.constant_value()
    return is_integer_reciprocal(x)


def _lit(x) -> str:
    return to_literal(x)


# -- family parameters ---------------------------------------------------


class FamilyParams:
    name = ""

    @property
    def mode(self) -> str:
        return _mode(*self._scalars())

    def _scalars(self):
        return ()

    def validate(self) -> None:
        pass

    def describe(self) -> str:
        return self.name


@dataclass(frozen=True)
class VAlphaEps(FamilyParams):
    alpha: object
    eps: object
    name = "V_alpha_eps"

    def _scalars(self):
        return (self.alpha, self.eps)

    def validate(self):
        if _bad_reciprocal(self.eps):
            raise InvalidParameterError(f"V_alpha_eps needs eps = 0 or 1/eps not an integer (eps={_lit(self.eps)})")

    def describe(self):
        return f"V_alpha_eps alpha={_lit(self.alpha)} eps={_lit(self.eps)}"


@dataclass(frozen=True)
class VBetaK(FamilyParams):
    beta: object
    k: int
    name = "V_beta_k"

    def _scalars(self):
        return (self.beta,)

    def validate(self):
        if not isinstance(self.k, int):
            raise InvalidParameterError(f"V_beta_k needs an integer k, got {self.k!r}")
        if is_zero(self.beta - self.k):
            raise InvalidParameterError(f"V_beta_k needs beta != k (beta={_lit(self.beta)}, k={self.k})")

    def describe(self):
        return f"V_beta_k beta={_lit(self.beta)} k={self.k}"


@dataclass(frozen=True)
class Novikov(FamilyParams):
    alpha: object
    name = "N_alpha"

    def _scalars(self):
        return (self.alpha,)

    def describe(self):
        return f"N_alpha alpha={_lit(self.alpha)}"


@dataclass(frozen=True)
class ChapotonA(FamilyParams):
    a: object
    name = "A_a"

    def _scalars(self):
        return (self.a,)

    def describe(self):
        return f"A_a a={_lit(self.a)}"


@dataclass(frozen=True)
class ChapotonB(FamilyParams):
    b: object
    name = "B_b"

    def _scalars(self):
        return (self.b,)

    def validate(self):
        if _bad_reciprocal(self.b):
            raise InvalidParameterError(f"B_b needs b = 0 or 1/b not an integer (b={_lit(self.b)})")

    def describe(self):
        return f"B_b b={_lit(self.b)}"


@dataclass(frozen=True)
class W1(FamilyParams):
    name = "W1"


def _vae(alpha, eps):
    def f(m, n):
        den = 1 + eps * (m + n)
        if is_zero(den):
            raise DenominatorVanishesError(f"1 + eps*(m+n) vanishes at (m,n)=({m},{n})", point=(m, n))
        return (alpha + n + alpha * eps * m) * (1 + eps * n) / den

    return f


def _vbk(beta, k, mode):
    shift = beta - k

    def f(m, n):
        if m + n + k != 0:
            return as_scalar(n + k, mode)
        return (n + k) * (beta - n - k) / shift

    return f


def make_family(p: FamilyParams) -> GradedLSA:
    """Closed-form graded product for a family; validates parameters first."""
    p.validate()
    mode = p.mode

    def s(x):
        return as_scalar(x, mode)

    if isinstance(p, VAlphaEps):
        fn = _vae(s(p.alpha), s(p.eps))
    elif isinstance(p, VBetaK):
        fn = _vbk(s(p.beta), p.k, mode)
    elif isinstance(p, Novikov):
        alpha = s(p.alpha)

        def fn(m, n):
            return alpha + n

    elif isinstance(p, ChapotonA):
        a = s(p.a)

        def fn(m, n):
            return 1 + a * n

    elif isinstance(p, ChapotonB):
        b = s(p.b)

        def fn(m, n):
            den = 1 + b * m
            if is_zero(den):
                raise DenominatorVanishesError(f"1 + b*m vanishes at m={m}", point=(m, n))
            return s(n) / den

    elif isinstance(p, W1):

        def fn(m, n):
            return s(1 + n)

    else:
        raise TypeError(f"unknown family parameters {p!r}")
    return GradedLSA(ClosedForm(fn, mode, params=p))


def identity_cocycle_defect(A, m: int, n: int):
    """Failure of the identity map to be a 1-cocycle for left multiplication.

    With q = id and rho = L, ``q[x_m, x_n] - L_m q(x_n) + L_n q(x_m)`` has
    coefficient ``(n - m) - f(m, n) + f(n, m)``.
    """
    f = structure_of(A)
    return (n - m) - f(m, n) + f(n, m)


# -- weight modules ------------------------------------------------------


class ModuleSpec:
    """A Witt module with one-dimensional weight spaces, basis v_n.

    ``action(i, n)`` is the coefficient c with ``x_i v_n = c v_{n+i}``.
    """

    name = ""
    canonical_range = None

    @property
    def mode(self) -> str:
        return _mode(*self._scalars())

    def _scalars(self):
        return ()

    def valid_index(self, n: int) -> bool:
        return True

    def action(self, i: int, n: int):
        raise NotImplementedError

    def describe(self) -> str:
        return self.name


@dataclass(frozen=True)
class FeiginFuchs(ModuleSpec):
    alpha: object
    beta: object
    name = "A_alpha_beta"
    # recorded only: Re is not available for symbolic parameters
    canonical_range = "0 <= Re(alpha) < 1"

    def _scalars(self):
        return (self.alpha, self.beta)

    def action(self, i, n):
        mode = self.mode
        return as_scalar(self.alpha, mode) + n + i * as_scalar(self.beta, mode)

    def describe(self):
        return f"A_alpha_beta alpha={_lit(self.alpha)} beta={_lit(self.beta)}"


@dataclass(frozen=True)
class APrime01(ModuleSpec):
    name = "A'_0_1"

    def valid_index(self, n):
        return n != 0

    def action(self, i, n):
        if n == 0:
            raise InvalidIndexError("A'_0_1 has no basis vector v_0")
        return as_scalar(n + i)


@dataclass(frozen=True)
class AAlpha(ModuleSpec):
    alpha: object
    name = "A_alpha"

    def _scalars(self):
        return (self.alpha,)

    def action(self, i, n):
        mode = self.mode
        if n != 0:
            return as_scalar(n + i, mode)
        return i * (as_scalar(self.alpha, mode) + i)

    def describe(self):
        return f"A_alpha alpha={_lit(self.alpha)}"


@dataclass(frozen=True)
class BBeta(ModuleSpec):
    beta: object
    name = "B_beta"

    def _scalars(self):
        return (self.beta,)

    def action(self, i, n):
        mode = self.mode
        if n + i != 0:
            return as_scalar(n, mode)
        return -i * (as_scalar(self.beta, mode) + i)

    def describe(self):
        return f"B_beta beta={_lit(self.beta)}"


@dataclass(frozen=True)
class PatchedModule(ModuleSpec):
    """A module action with some coefficients overridden (for corruption tests)."""

    base: ModuleSpec
    overrides: dict = field(default_factory=dict, hash=False)
    name = "patched"

    @property
    def mode(self):
        return self.base.mode

    def valid_index(self, n):
        return self.base.valid_index(n)

    def action(self, i, n):
        if (i, n) in self.overrides:
            return as_scalar(self.overrides[(i, n)], self.mode)
        return self.base.action(i, n)

    def describe(self):
        return f"patched({self.base.describe()})"


def module_action(s: ModuleSpec, i: int, n: int):
    return s.action(i, n)


def verify_module(s: ModuleSpec, w: IndexWindow) -> VerificationReport:
    """Check ``[x_i, x_j] v_n = x_i (x_j v_n) - x_j (x_i v_n)`` on the window.

    Coefficient form: ``(j - i) c(i+j, n) = c(j, n) c(i, n+j) - c(i, n) c(j, n+i)``.
    A term that would land on a missing basis vector must carry a zero
    coefficient; otherwise it is reported.  The central element acts as zero,
    so the same check covers the Virasoro action.
    """
    report = VerificationReport(window=w)

    def hop(first, n, second):
        # coefficient of x_second x_first v_n, zero if x_first v_n is zero
        c1 = s.action(first, n)
        if is_zero(c1):
            return c1
        if not s.valid_index(n + first):
            raise InvalidIndexError(f"x_{first} v_{n} has nonzero coefficient on missing v_{n + first}")
        return c1 * s.action(second, n + first)

    for i in w.indices:
        for j in w.indices:
            for n in w.indices:
                if not s.valid_index(n):
                    report.triples_skipped += 1
                    continue
                report.triples_checked += 1
                try:
                    d = (j - i) * s.action(i + j, n) - hop(j, n, i) + hop(i, n, j)
                except (ArithmeticError, ValueError) as exc:
                    report.errors.append(PointError("module", (i, j, n), str(exc)))
                    continue
                if not is_zero(d):
                    report.defects.append(Defect("module", (i, j, n), d))
    return report
