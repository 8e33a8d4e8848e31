"""Central extensions of graded products by an annihilator theta.

The extended product is ``x_m x_n = f(m, n) x_{m+n} + omega(m, n) theta``
with theta killing everything.  It is left-symmetric with the Virasoro
algebra as commutator algebra exactly when

* ``omega(m, n) - omega(n, m) = (n^3 - n)/12 * [m + n = 0]``  (skew part), and
* ``(n - m) omega(m+n, l) = omega(m, n+l) f(n, l) - omega(n, m+l) f(m, l)``.

The system is affine: the Virasoro normalization of the skew part is fixed,
so no quotient by coboundaries is taken.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .field import GAUSSIAN, as_scalar, is_integer_reciprocal, is_zero, mode_of, RationalFunction
from .linsolve import Inconsistent, LinearSystem, solve
from .witt import (
    Defect,
    GradedLSA,
    IndexWindow,
    OutOfWindowError,
    PointError,
    VerificationReport,
    structure_of,
)

THETA = "theta"


class CocycleError(ValueError):
    """Invalid cocycle parameters, or a cocycle that fails its identities."""


# -- cocycles ------------------------------------------------------------


class Cocycle:
    mode: str = GAUSSIAN
    window: IndexWindow | None = None

    def __call__(self, m: int, n: int):
        raise NotImplementedError

    def defined(self, m: int, n: int) -> bool:
        return True


class ClosedFormCocycle(Cocycle):
    """omega(m, n) = (n^3 - n - (eps - 1/eps) n^2)/24 on the anti-diagonal."""

    def __init__(self, eps):
        if isinstance(eps, RationalFunction):
            mode = "symbolic"
            bad = is_zero(eps) or (eps.is_constant() and is_integer_reciprocal(eps.constant_value()))
        else:
            mode = GAUSSIAN
            eps = as_scalar(eps)
            bad = eps.is_zero() or is_integer_reciprocal(eps)
        if bad:
            raise CocycleError(f"closed-form cocycle needs eps != 0 and 1/eps not an integer (eps={eps})")
        self.eps = eps
        self.mode = mode

    def __call__(self, m, n):
        return closed_form_omega(self.eps, m, n)

    def __repr__(self):
        return f"ClosedFormCocycle(eps={self.eps})"


class TableCocycle(Cocycle):
    """omega given by explicit entries; missing pairs are not evaluable."""

    def __init__(self, entries: dict, window: IndexWindow, mode: str | None = None):
        if mode is None:
            mode = mode_of(next(iter(entries.values()))) if entries else GAUSSIAN
        for m, n in entries:
            if m not in window or n not in window:
                raise ValueError(f"cocycle entry ({m},{n}) lies outside the window N={window.N}")
        self.entries = {p: as_scalar(v, mode) for p, v in entries.items()}
        self.window = window
        self.mode = mode

    def __call__(self, m, n):
        try:
            return self.entries[(m, n)]
        except KeyError:
            raise OutOfWindowError(f"omega({m},{n}) is not in the cocycle table") from None

    def defined(self, m, n):
        return (m, n) in self.entries

    def __repr__(self):
        return f"TableCocycle(N={self.window.N}, entries={len(self.entries)})"


def closed_form_omega(eps, m: int, n: int):
    if isinstance(eps, RationalFunction):
        e = eps
        if is_zero(e):
            raise CocycleError("eps must be nonzero")
    else:
        e = as_scalar(eps)
        if e.is_zero() or is_integer_reciprocal(e):
            raise CocycleError(f"closed-form cocycle needs eps != 0 and 1/eps not an integer (eps={e})")
    if m + n != 0:
        return e * 0
    return (n**3 - n - (e - 1 / e) * n * n) / 24


def virasoro_cocycle(m: int, n: int) -> Fraction:
    """The Virasoro 2-cocycle (n^3 - n)/12 * [m + n = 0]."""
    return Fraction(n**3 - n, 12) if m + n == 0 else Fraction(0)


def virasoro_skew_defect(omega, m: int, n: int):
    return omega(m, n) - omega(n, m) - virasoro_cocycle(m, n)


def lsa_cocycle_defect(omega, A, m: int, n: int, l: int):
    f = structure_of(A)
    return (n - m) * omega(m + n, l) - omega(m, n + l) * f(n, l) + omega(n, m + l) * f(m, l)


def _in_window(w, *idx):
    return all(i in w for i in idx)


def verify_cocycle(omega, A, w: IndexWindow) -> VerificationReport:
    """Both cocycle sweeps on the window.

    Table cocycles are only checked where every entry the identity needs is
    present.
    """
    report = VerificationReport(window=w)
    defined = omega.defined
    for m in w.indices:
        for n in w.indices:
            if not (defined(m, n) and defined(n, m)):
                continue
            report.pairs_checked += 1
            try:
                d = virasoro_skew_defect(omega, m, n)
            except (ArithmeticError, KeyError) as exc:
                report.errors.append(PointError("skew", (m, n), str(exc)))
                continue
            if not is_zero(d):
                report.defects.append(Defect("skew", (m, n), d))
    for m in w.indices:
        for n in w.indices:
            for l in w.indices:
                if not (defined(m + n, l) and defined(m, n + l) and defined(n, m + l)):
                    report.triples_skipped += 1
                    continue
                report.triples_checked += 1
                try:
                    d = lsa_cocycle_defect(omega, A, m, n, l)
                except (ArithmeticError, KeyError) as exc:
                    report.errors.append(PointError("cocycle", (m, n, l), str(exc)))
                    continue
                if not is_zero(d):
                    report.defects.append(Defect("cocycle", (m, n, l), d))
    return report


# -- linear system -------------------------------------------------------


def build_cocycle_system(A, w: IndexWindow) -> LinearSystem:
    """All instances of both cocycle identities with every index argument in ``w``.

    Unknowns are omega(m, n) for (m, n) in the window, ordered
    lexicographically; skew rows come first, then the left-symmetry rows, each
    in lexicographic order of their generating indices.
    """
    f = structure_of(A)
    mode = f.mode
    unknowns = list(w.pairs())
    system = LinearSystem(unknowns)
    for m, n in w.pairs():
        coeffs: dict = {}
        coeffs[(m, n)] = coeffs.get((m, n), 0) + 1
        coeffs[(n, m)] = coeffs.get((n, m), 0) - 1
        system.add(
            {k: as_scalar(v, mode) for k, v in coeffs.items()},
            as_scalar(virasoro_cocycle(m, n), mode),
            ("skew", (m, n)),
        )
    for m in w.indices:
        for n in w.indices:
            for l in w.indices:
                if not _in_window(w, m + n, n + l, m + l):
                    continue
                coeffs = {}

                def put(key, v):
                    coeffs[key] = coeffs.get(key, 0) + v

                put((m + n, l), as_scalar(n - m, mode))
                put((m, n + l), -f(n, l))
                put((n, m + l), f(m, l))
                system.add(coeffs, as_scalar(0, mode), ("cocycle", (m, n, l)))
    return system


def certified_region(w: IndexWindow) -> list:
    """Pairs on which uniqueness is certified: |m|, |n|, |m+n| <= N - 2.

    Entries with |m + n| > N never occur in a usable identity instance, so they
    are unconstrained by construction and excluded.
    """
    k = w.N - 2
    return [(m, n) for m, n in w.pairs() if abs(m) <= k and abs(n) <= k and abs(m + n) <= k]


@dataclass
class Unique:
    omega: TableCocycle
    region: list
    free_unknowns: int

    kind = "unique"


@dataclass
class Infeasible:
    witness: list  # [(origin, multiplier)]
    residual: object
    system: LinearSystem = field(repr=False)

    kind = "infeasible"

    def check(self) -> bool:
        """Recombine the generating identities: 0 = residual with residual != 0."""
        index = {row.origin: i for i, row in enumerate(self.system.rows)}
        coeffs, rhs = self.system.combine({index[o]: c for o, c in self.witness})
        return not coeffs and not is_zero(rhs) and rhs == self.residual


@dataclass
class Underdetermined:
    particular: dict
    nullspace: list
    region: list

    kind = "underdetermined"


def solve_cocycle(A, w: IndexWindow):
    """Solve both cocycle identities for omega on the window, exactly."""
    system = build_cocycle_system(A, w)
    result = solve(system)
    mode = structure_of(A).mode
    if isinstance(result, Inconsistent):
        witness = sorted(
            ((system.rows[i].origin, c) for i, c in result.weights.items()),
            key=lambda t: (t[0][0] != "skew", t[0]),
        )
        return Infeasible(witness, result.residual, system)
    region = certified_region(w)
    determined = result.determined
    if all(p in determined for p in region):
        entries = {p: as_scalar(result.particular[p], mode) for p in region}
        return Unique(TableCocycle(entries, w, mode), region, len(result.free))
    particular = {k: as_scalar(v, mode) for k, v in result.particular.items()}
    return Underdetermined(particular, result.nullspace, region)


# -- the extended algebra ------------------------------------------------


@dataclass
class ExtendedAlgebra:
    """Basis {x_n} plus theta; elements are dicts ``{n or THETA: coeff}``."""

    base: GradedLSA
    omega: Cocycle

    def product(self, a, b) -> dict:
        if a == THETA or b == THETA:
            return {}
        f = structure_of(self.base)
        out = {}
        c = f(a, b)
        if not is_zero(c):
            out[a + b] = c
        t = self.omega(a, b)
        if not is_zero(t):
            out[THETA] = t
        return out

    def multiply(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for a, ca in x.items():
            for b, cb in y.items():
                for k, v in self.product(a, b).items():
                    s = out.get(k, 0) + ca * cb * v
                    if is_zero(s):
                        out.pop(k, None)
                    else:
                        out[k] = s
        return out

    def bracket(self, a, b) -> dict:
        return _sub(self.product(a, b), self.product(b, a))

    def associator(self, a, b, c) -> dict:
        ab_c = self.multiply(self.product(a, b), {c: 1})
        a_bc = self.multiply({a: 1}, self.product(b, c))
        return _sub(ab_c, a_bc)


def _sub(x: dict, y: dict) -> dict:
    out = dict(x)
    for k, v in y.items():
        s = out.get(k, 0) - v
        if is_zero(s):
            out.pop(k, None)
        else:
            out[k] = s
    return out


def verify_extended(ext: ExtendedAlgebra, w: IndexWindow) -> VerificationReport:
    """Associator symmetry in the extended basis, on both x and theta parts.

    Triples involving theta vanish identically and are counted as checked.
    """
    report = VerificationReport(window=w)
    basis = list(w.indices) + [THETA]
    for a in basis:
        for b in basis:
            for c in basis:
                if THETA in (a, b, c):
                    report.triples_checked += 1
                    continue
                if not _in_window(w, a + b, b + c, a + c):
                    report.triples_skipped += 1
                    continue
                report.triples_checked += 1
                try:
                    d = _sub(ext.associator(a, b, c), ext.associator(b, a, c))
                except (ArithmeticError, KeyError) as exc:
                    report.errors.append(PointError("extended", (a, b, c), str(exc)))
                    continue
                if d:
                    report.defects.append(Defect("extended", (a, b, c), d))
    return report


def extend_algebra(A, omega: Cocycle, w: IndexWindow | None = None) -> ExtendedAlgebra:
    """Adjoin theta; refuses a cocycle that fails either identity on ``w``."""
    w = w or IndexWindow(8)
    report = verify_cocycle(omega, A, w)
    if not report.ok:
        first = (report.defects or report.errors)[0]
        raise CocycleError(
            f"cocycle fails on the window N={w.N}: {len(report.defects)} defects, "
            f"{len(report.errors)} errors; first at {first.kind}{first.indices}"
        )
    base = A if isinstance(A, GradedLSA) else GradedLSA(A)
    return ExtendedAlgebra(base, omega)


# -- the reduction used in the uniqueness argument --------------------------


@dataclass
class ReducedSolution:
    eps: object
    phi: dict
    omega: TableCocycle

    kind = "unique"


@dataclass
class ReducedContradiction:
    step: str
    detail: str

    kind = "infeasible"


def reduce_cocycle(A, w: IndexWindow):
    """Solve for omega by reducing to a one-variable function on the anti-diagonal.

    Steps: omega(0, 0) must be f(0,0)(n^2 - 1)/24 for every n, forcing
    f(0, 0) = 0; then omega vanishes off the anti-diagonal,
    omega(n, -n) = phi(n), and psi(m) = phi(m) / (m (1 - eps m)) obeys

        (1 - eps n) psi(n) + (1 + eps n) psi(-n) = (1 - n^2)/12
        (n - m) psi(m + n) = -m psi(m) + n psi(n)

    which pins psi(1) and then every psi(m) by two-term recurrences.  The
    result is checked against both identities on the whole window.
    """
    f = structure_of(A)
    mode = f.mode
    s = lambda x: as_scalar(x, mode)  # noqa: E731

    f00 = f(0, 0)
    if not is_zero(f00):
        at1 = f00 * Fraction(1**2 - 1, 24)
        at2 = f00 * Fraction(2**2 - 1, 24)
        return ReducedContradiction(
            "omega(0,0)",
            f"omega(0,0) = f(0,0)(n^2-1)/24 for all n, but n=1 gives {at1} and n=2 gives {at2}",
        )

    F = f(1, 1)
    if is_zero(1 - 2 * F):
        return ReducedContradiction("eps", f"f(1,1)={F} does not come from a V_0_eps product")
    eps = (F - 1) / (1 - 2 * F)

    # psi(n) as multiples of psi(1)
    c = {1: s(1)}
    c[-1] = -(1 - eps) / (1 + eps)
    c[2] = (3 * c[1] - c[-1]) / 2
    c[-2] = (3 * c[-1] - c[1]) / 2
    lead = (1 - 2 * eps) * c[2] + (1 + 2 * eps) * c[-2]
    target = s(Fraction(1 - 2**2, 12))
    if is_zero(lead):
        return ReducedContradiction(
            "psi(2),psi(-2)",
            f"(1-2eps)psi(2)+(1+2eps)psi(-2) reduces to 0 but must equal {target}",
        )
    psi1 = target / lead
    psi = {k: v * psi1 for k, v in c.items()}
    for m in range(2, w.N):
        psi[m + 1] = psi[1] + Fraction(m, m - 1) * (psi[m] - psi[1])
    for m in range(-3, -w.N - 1, -1):
        psi[m] = psi[1] + Fraction(m - 1, m) * (psi[m + 1] - psi[1])

    phi = {0: s(0)}
    for m, v in psi.items():
        if abs(m) <= w.N:
            phi[m] = m * (1 - eps * m) * v
    entries = {(m, n): (phi[m] if m + n == 0 else s(0)) for m, n in w.pairs()}
    omega = TableCocycle(entries, w, mode)

    report = verify_cocycle(omega, A, w)
    if not report.ok:
        first = (report.defects or report.errors)[0]
        return ReducedContradiction("audit", f"recurrence solution fails {first.kind}{first.indices}")
    return ReducedSolution(eps, phi, omega)
