"""Graded algebras on the Witt basis and the defects of their identities.

A graded product ``x_m x_n = f(m, n) x_{m+n}`` is described by its
structure function ``f``.  Every identity the product has to satisfy is
exposed as a *defect*: the residual scalar, which is zero exactly when the
identity holds at that index.  Residuals work the same in both scalar
fields, so a symbolic sweep proves an identity in Q(alpha, eps).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

import networkx as nx

from .field import GAUSSIAN, as_scalar, is_zero, mode_of

THREADS_ENV = "PRELIE_WITT_THREADS"


class EvaluationError(ArithmeticError):
    """A structure function could not be evaluated at an index pair."""


class OutOfWindowError(EvaluationError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "index outside table window"


@dataclass(frozen=True)
class IndexWindow:
    """The index set {-N, ..., N}."""

    N: int

    def __post_init__(self):
        if not isinstance(self.N, int) or self.N < 2:
            raise ValueError(f"window half-width must be an integer >= 2, got {self.N!r}")

    @property
    def indices(self) -> range:
        return range(-self.N, self.N + 1)

    def __contains__(self, i) -> bool:
        return -self.N <= i <= self.N

    def __len__(self) -> int:
        return 2 * self.N + 1

    def pairs(self):
        r = self.indices
        return ((m, n) for m in r for n in r)


class StructureFunction:
    """Base for ``f(m, n)``; subclasses are :class:`ClosedForm` and :class:`Table`."""

    mode: str = GAUSSIAN
    window: IndexWindow | None = None

    def __call__(self, m: int, n: int):
        raise NotImplementedError

    def evaluable(self, m: int, n: int) -> bool:
        return True

    def tabulate(self, window: IndexWindow) -> Table:
        return Table({(m, n): self(m, n) for m, n in window.pairs()}, window, self.mode)


class ClosedForm(StructureFunction):
    def __init__(self, fn: Callable, mode: str = GAUSSIAN, params=None, label: str | None = None):
        self._fn = fn
        self.mode = mode
        self.params = params
        self.label = label or (params.describe() if params is not None else "closed form")

    def __call__(self, m, n):
        return self._fn(m, n)

    def __repr__(self):
        return f"ClosedForm({self.label})"


class Table(StructureFunction):
    """Finite table of ``f`` on ``window x window``."""

    def __init__(self, entries: dict, window: IndexWindow, mode: str | None = None):
        if mode is None:
            mode = mode_of(next(iter(entries.values()))) if entries else GAUSSIAN
        missing = [p for p in window.pairs() if p not in entries]
        if missing:
            raise ValueError(f"table is not total on the window; first missing pair {missing[0]}")
        extra = [p for p in entries if p[0] not in window or p[1] not in window]
        if extra:
            raise ValueError(f"table entry {extra[0]} lies outside the window")
        self.entries = {p: as_scalar(v, mode) for p, v in entries.items()}
        self.window = window
        self.mode = mode

    def __call__(self, m, n):
        try:
            return self.entries[(m, n)]
        except KeyError:
            raise OutOfWindowError(f"f({m},{n}) is outside the table window N={self.window.N}") from None

    def evaluable(self, m, n):
        return (m, n) in self.entries

    def with_entry(self, m: int, n: int, value) -> Table:
        entries = dict(self.entries)
        entries[(m, n)] = value
        return Table(entries, self.window, self.mode)

    def __eq__(self, other):
        if not isinstance(other, Table):
            return NotImplemented
        return self.window == other.window and self.entries == other.entries

    def __repr__(self):
        return f"Table(N={self.window.N}, mode={self.mode})"


@dataclass(frozen=True)
class GradedLSA:
    """A graded product on the Witt basis.  Not verified on construction."""

    f: StructureFunction

    @property
    def mode(self) -> str:
        return self.f.mode

    @classmethod
    def from_table(cls, entries: dict, window: IndexWindow, mode: str | None = None) -> GradedLSA:
        return cls(Table(entries, window, mode))


def structure_of(x) -> StructureFunction:
    if isinstance(x, GradedLSA):
        return x.f
    if isinstance(x, StructureFunction):
        return x
    raise TypeError(f"expected GradedLSA or StructureFunction, got {type(x).__name__}")


# -- defects ----------------------------------------------------------------


def product(A, m: int, n: int):
    return structure_of(A)(m, n)


def commutator_defect(A, m: int, n: int):
    f = structure_of(A)
    return f(m, n) - f(n, m) - (n - m)


def associator(A, m: int, n: int, l: int):
    """Coefficient of x_{m+n+l} in (x_m x_n) x_l - x_m (x_n x_l)."""
    f = structure_of(A)
    return f(m, n) * f(m + n, l) - f(n, l) * f(m, n + l)


def associator_symmetry_defect(A, m: int, n: int, l: int):
    """associator(m, n, l) - associator(n, m, l), with no bracket assumed."""
    return associator(A, m, n, l) - associator(A, n, m, l)


def left_symmetry_defect(A, m: int, n: int, l: int):
    f = structure_of(A)
    return (n - m) * f(m + n, l) - f(n, l) * f(m, n + l) + f(m, l) * f(n, m + l)


def regular_rep_defect(A, m: int, n: int, p: int):
    """Coefficient of x_{m+n+p} in ([L_m, L_n] - L_{[x_m, x_n]}) x_p.

    Always equals ``-left_symmetry_defect(A, m, n, p)``.
    """
    f = structure_of(A)
    return f(n, p) * f(m, n + p) - f(m, p) * f(n, m + p) - (n - m) * f(m + n, p)


# -- sweeps -----------------------------------------------------------------


@dataclass(frozen=True)
class Defect:
    kind: str
    indices: tuple
    value: object

    def __str__(self):
        return f"{self.kind}{self.indices} = {self.value}"


@dataclass(frozen=True)
class PointError:
    kind: str
    indices: tuple
    message: str


@dataclass
class VerificationReport:
    window: IndexWindow
    pairs_checked: int = 0
    triples_checked: int = 0
    triples_skipped: int = 0
    defects: list = field(default_factory=list)
    errors: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.defects and not self.errors

    def summary_lines(self, limit: int = 10) -> list:
        lines = [
            f"window={self.window.N}",
            f"pairs_checked={self.pairs_checked}",
            f"triples_checked={self.triples_checked}",
            f"triples_skipped={self.triples_skipped}",
            f"defects={len(self.defects)}",
            f"errors={len(self.errors)}",
        ]
        for d in self.defects[:limit]:
            idx = ",".join(str(i) for i in d.indices)
            lines.append(f"witness={d.kind}({idx}) value={d.value}")
        for e in self.errors[:limit]:
            idx = ",".join(str(i) for i in e.indices)
            lines.append(f"error={e.kind}({idx}) {e.message}")
        return lines


def sweep_threads() -> int:
    raw = os.environ.get(THREADS_ENV)
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return n


def run_chunks(work: Callable, chunks: Iterable) -> list:
    """Map ``work`` over chunks, threaded when PRELIE_WITT_THREADS > 1."""
    chunks = list(chunks)
    threads = sweep_threads()
    if threads == 1 or len(chunks) == 1:
        return [work(c) for c in chunks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(work, chunks))


class _Memo(StructureFunction):
    """Cached evaluation of f; evaluation failures are remembered too."""

    def __init__(self, f: StructureFunction):
        self.f = f
        self.mode = f.mode
        self.window = f.window
        self.cache = {}

    def __call__(self, m, n):
        key = (m, n)
        try:
            v = self.cache[key]
        except KeyError:
            try:
                v = self.f(m, n)
            except (ArithmeticError, KeyError) as exc:
                v = exc
            self.cache[key] = v
        if isinstance(v, BaseException):
            raise v
        return v


def _triple_in_table(f: StructureFunction, m, n, l) -> bool:
    if f.window is None:
        return True
    w = f.window
    return (m + n) in w and (n + l) in w and (m + l) in w


def verify_lsa(A, w: IndexWindow) -> VerificationReport:
    """Check the commutator condition and left-symmetry on the window.

    Closed forms are checked on every pair and triple of ``w``; a table is
    checked only on triples whose five required entries lie in its window.
    """
    f = structure_of(A)
    memo = _Memo(f)
    report = VerificationReport(window=w)

    def pairs_for(m):
        out = []
        for n in w.indices:
            try:
                d = commutator_defect(memo, m, n)
            except (ArithmeticError, KeyError) as exc:
                out.append(PointError("commutator", (m, n), str(exc)))
                continue
            if not is_zero(d):
                out.append(Defect("commutator", (m, n), d))
        return out

    def triples_for(m):
        out, checked, skipped = [], 0, 0
        for n in w.indices:
            for l in w.indices:
                if not _triple_in_table(f, m, n, l):
                    skipped += 1
                    continue
                checked += 1
                try:
                    d = left_symmetry_defect(memo, m, n, l)
                except (ArithmeticError, KeyError) as exc:
                    out.append(PointError("left-symmetry", (m, n, l), str(exc)))
                    continue
                if not is_zero(d):
                    out.append(Defect("left-symmetry", (m, n, l), d))
        return out, checked, skipped

    for chunk in run_chunks(pairs_for, w.indices):
        for item in chunk:
            (report.errors if isinstance(item, PointError) else report.defects).append(item)
    report.pairs_checked = len(w) ** 2
    for items, checked, skipped in run_chunks(triples_for, w.indices):
        report.triples_checked += checked
        report.triples_skipped += skipped
        for item in items:
            (report.errors if isinstance(item, PointError) else report.defects).append(item)
    return report


def verify_associator_symmetry(A, w: IndexWindow) -> VerificationReport:
    """Left-symmetry in the plain sense, with no Witt bracket imposed."""
    f = structure_of(A)
    memo = _Memo(f)
    report = VerificationReport(window=w)

    def triples_for(m):
        out, checked, skipped = [], 0, 0
        for n in w.indices:
            for l in w.indices:
                if not _triple_in_table(f, m, n, l):
                    skipped += 1
                    continue
                checked += 1
                try:
                    d = associator_symmetry_defect(memo, m, n, l)
                except (ArithmeticError, KeyError) as exc:
                    out.append(PointError("associator-symmetry", (m, n, l), str(exc)))
                    continue
                if not is_zero(d):
                    out.append(Defect("associator-symmetry", (m, n, l), d))
        return out, checked, skipped

    for items, checked, skipped in run_chunks(triples_for, w.indices):
        report.triples_checked += checked
        report.triples_skipped += skipped
        for item in items:
            (report.errors if isinstance(item, PointError) else report.defects).append(item)
    return report


# -- weights and connectivity ---------------------------------------------


@dataclass
class WeightReport:
    weights: list
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def weights(A, w: IndexWindow) -> WeightReport:
    """Eigenvalues of left multiplication by x_0, with the laws they must obey.

    On a compatible structure f(m, 0) = f(0, 0) and f(0, n) = f(0, 0) + n;
    index points breaking either law are listed as violations.
    """
    f = structure_of(A)
    base = f(0, 0)
    pairs = []
    violations = []
    for n in w.indices:
        lam = f(0, n)
        pairs.append((n, lam))
        if not is_zero(lam - base - n):
            violations.append(("weight-law", n, lam - base - n))
    for m in w.indices:
        d = f(m, 0) - base
        if not is_zero(d):
            violations.append(("right-zero", m, d))
    return WeightReport(pairs, violations)


@dataclass
class ConnectivityReport:
    components: list
    note: str = (
        "finite-window evidence only: connectivity of the action graph on a "
        "window does not prove indecomposability of the infinite module"
    )

    @property
    def connected(self) -> bool:
        return len(self.components) == 1


def connectivity_check(A, w: IndexWindow) -> ConnectivityReport:
    """Weakly connected components of the graph n -> m+n for f(m, n) != 0."""
    f = structure_of(A)
    g = nx.DiGraph()
    g.add_nodes_from(w.indices)
    for m, n in w.pairs():
        if (m + n) in w and not is_zero(f(m, n)):
            g.add_edge(n, m + n)
    comps = sorted((sorted(c) for c in nx.weakly_connected_components(g)), key=lambda c: c[0])
    return ConnectivityReport(comps)
