"""Exact sparse linear systems over Q(i) or Q(alpha, eps).

Rows are reduced one at a time against the pivots found so far, in the
order they were generated, so the pivot structure is deterministic.  Each
pivot remembers which input rows it was built from; when a row reduces to
``0 = c`` with ``c != 0`` that record is the infeasibility certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .field import inv, is_zero


@dataclass
class Row:
    coeffs: dict
    rhs: object
    origin: tuple


@dataclass
class LinearSystem:
    """Sparse rows over a list of unknowns; row order is significant."""

    unknowns: list
    rows: list = field(default_factory=list)

    def add(self, coeffs: dict, rhs, origin: tuple) -> None:
        coeffs = {k: v for k, v in coeffs.items() if not is_zero(v)}
        if not coeffs and is_zero(rhs):
            return
        self.rows.append(Row(coeffs, rhs, origin))

    def combine(self, weights: dict):
        """Return (coefficients, rhs) of sum(weights[i] * rows[i])."""
        acc: dict = {}
        rhs = 0
        for i, c in weights.items():
            row = self.rows[i]
            for k, v in row.coeffs.items():
                s = acc.get(k, 0) + c * v
                if is_zero(s):
                    acc.pop(k, None)
                else:
                    acc[k] = s
            rhs = rhs + c * row.rhs
        return acc, rhs


@dataclass
class Inconsistent:
    weights: dict  # row index -> multiplier
    residual: object  # the nonzero right-hand side the combination produces


@dataclass
class Solved:
    particular: dict
    nullspace: list  # list of dicts unknown -> value
    pivots: list
    free: list

    @property
    def determined(self) -> set:
        """Unknowns with the same value in every solution."""
        moving = set()
        for vec in self.nullspace:
            moving.update(k for k, v in vec.items() if not is_zero(v))
        return set(self.particular) - moving


def _axpy(target: dict, factor, source: dict) -> None:
    """target -= factor * source, dropping zeros."""
    for k, v in source.items():
        s = target.get(k, 0) - factor * v
        if is_zero(s):
            target.pop(k, None)
        else:
            target[k] = s


def solve(system: LinearSystem):
    """Gauss-Jordan elimination; returns :class:`Solved` or :class:`Inconsistent`."""
    position = {u: i for i, u in enumerate(system.unknowns)}
    # pivot column -> [coeffs (leading 1), rhs, weights]
    pivots: dict = {}

    for idx, row in enumerate(system.rows):
        r = dict(row.coeffs)
        b = row.rhs
        used = []
        while True:
            cols = [c for c in r if c in pivots]
            if not cols:
                break
            c = min(cols, key=position.__getitem__)
            f = r[c]
            pc, pb, _ = pivots[c]
            _axpy(r, f, pc)
            b = b - f * pb
            used.append((c, f))
        if not r:
            if is_zero(b):
                continue
            weights = {idx: 1}
            for c, f in used:
                _axpy(weights, f, pivots[c][2])
            return Inconsistent(weights, b)
        lead = min(r, key=position.__getitem__)
        scale = inv(r[lead])
        r = {k: v * scale for k, v in r.items()}
        weights = {idx: 1}
        for c, f in used:
            _axpy(weights, f, pivots[c][2])
        weights = {k: v * scale for k, v in weights.items()}
        pivots[lead] = [r, b * scale, weights]

    # back substitution to reduced echelon form
    order = sorted(pivots, key=position.__getitem__, reverse=True)
    for c in order:
        pc, pb, _ = pivots[c]
        for other in [k for k in pc if k != c and k in pivots]:
            f = pc[other]
            oc, ob, _ = pivots[other]
            _axpy(pc, f, oc)
            pb = pb - f * ob
        pivots[c][1] = pb

    free = [u for u in system.unknowns if u not in pivots]
    particular = {u: 0 for u in system.unknowns}
    for c, (pc, pb, _) in pivots.items():
        particular[c] = pb
    nullspace = []
    for fcol in free:
        vec = {fcol: 1}
        for c, (pc, _, _) in pivots.items():
            v = pc.get(fcol)
            if v is not None:
                vec[c] = -v
        nullspace.append(vec)
    return Solved(particular, nullspace, sorted(pivots, key=position.__getitem__), free)
