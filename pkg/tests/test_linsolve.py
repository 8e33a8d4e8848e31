import random
from fractions import Fraction

import sympy as sp

from prelie_witt.field import GaussianRational
from prelie_witt.linsolve import Inconsistent, LinearSystem, Solved, solve


def _system(rows, unknowns):
    s = LinearSystem(list(unknowns))
    for i, (coeffs, rhs) in enumerate(rows):
        s.add({k: GaussianRational(v) for k, v in coeffs.items()}, GaussianRational(rhs), ("row", i))
    return s


def test_unique_solution():
    s = _system([({"x": 1, "y": 1}, 3), ({"x": 1, "y": -1}, 1)], "xy")
    r = solve(s)
    assert isinstance(r, Solved)
    assert r.particular == {"x": 2, "y": 1}
    assert r.determined == {"x", "y"}


def test_inconsistent_witness_recombines():
    s = _system([({"x": 1, "y": 1}, 3), ({"x": 2, "y": 2}, 5), ({"y": 1}, 0)], "xy")
    r = solve(s)
    assert isinstance(r, Inconsistent)
    coeffs, rhs = s.combine(r.weights)
    assert not coeffs and rhs == r.residual != 0


def test_underdetermined_nullspace():
    s = _system([({"x": 1, "y": 1, "z": 1}, 1), ({"z": 1}, 2)], "xyz")
    r = solve(s)
    assert r.free == ["y"]
    assert r.determined == {"z"}
    # every nullspace vector solves the homogeneous system
    for vec in r.nullspace:
        for row in s.rows:
            assert sum(c * vec.get(k, 0) for k, c in row.coeffs.items()) == 0


def test_zero_rows_are_dropped():
    s = _system([({}, 0), ({"x": 0}, 0), ({"x": 1}, 4)], "x")
    assert len(s.rows) == 1


def test_random_systems_against_sympy():
    rng = random.Random(7)
    names = ["u0", "u1", "u2", "u3"]
    syms = sp.symbols(names)
    for trial in range(60):
        rows = []
        for _ in range(rng.randint(1, 5)):
            coeffs = {k: Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for k in rng.sample(names, rng.randint(1, 4))}
            rows.append((coeffs, rng.randint(-4, 4)))
        r = solve(_system(rows, names))
        eqs = [sum(sp.Rational(c.numerator, c.denominator) * syms[names.index(k)] for k, c in co.items()) - b for co, b in rows]
        ref = sp.linsolve(eqs, syms)
        if isinstance(r, Inconsistent):
            assert ref == sp.EmptySet
            continue
        assert ref != sp.EmptySet
        point = {syms[names.index(k)]: sp.Rational(v.re.numerator, v.re.denominator) if hasattr(v, "re") else v for k, v in r.particular.items()}
        for eq in eqs:
            assert eq.subs(point) == 0
        (sol,) = ref
        fixed = {names[i] for i, expr in enumerate(sol) if expr.free_symbols == set()}
        assert r.determined == fixed
