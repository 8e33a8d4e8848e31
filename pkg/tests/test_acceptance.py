"""Acceptance checks, one per criterion, all in exact arithmetic.

Each check prints a single ``criterion N: PASS|FAIL ...`` line.  Run with
``pytest tests/test_acceptance.py`` or directly with ``python3``.
"""

from __future__ import annotations

import itertools
import random
import re
import sys
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction
from io import StringIO
from pathlib import Path

import pytest

from prelie_witt.central import (
    THETA,
    ClosedFormCocycle,
    Infeasible,
    ReducedSolution,
    Unique,
    closed_form_omega,
    extend_algebra,
    reduce_cocycle,
    solve_cocycle,
)
from prelie_witt.classify import (
    AffineScaling,
    ConstantScaling,
    Iso,
    TableScaling,
    flip,
    isomorphic,
    rescale_basis,
)
from prelie_witt.cli import main
from prelie_witt.cli.literal import parse_gaussian
from prelie_witt.families import (
    AAlpha,
    APrime01,
    BBeta,
    ChapotonA,
    ChapotonB,
    FeiginFuchs,
    InvalidParameterError,
    VAlphaEps,
    VBetaK,
    make_family,
    verify_module,
)
from prelie_witt.field import ALPHA, EPS, I, BivariatePolynomial, GaussianRational, RationalFunction
from prelie_witt.witt import (
    ClosedForm,
    IndexWindow,
    left_symmetry_defect,
    regular_rep_defect,
    verify_associator_symmetry,
    verify_lsa,
)

Q = Fraction
ALPHAS = [0, 1, Q(1, 2), -2, I]
EPSILONS = [0, 2, -2, Q(2, 3), I]
BETAS = [1, -3, Q(1, 2) + I]
KS = [0, 1, -2]


def _g(x):
    return GaussianRational.coerce(x)


def _valid(p):
    try:
        p.validate()
        return True
    except InvalidParameterError:
        return False


def grid():
    vae = [VAlphaEps(_g(a), _g(e)) for a in ALPHAS for e in EPSILONS]
    vbk = [VBetaK(_g(b), k) for b in BETAS for k in KS]
    return [p for p in vae + vbk if _valid(p)]


def report(n: int, ok: bool, detail: str) -> None:
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}", flush=True)


# -- 1 ----------------------------------------------------------------------


def check_1():
    w = IndexWindow(12)
    bad = []
    params = grid()
    for p in params:
        r = verify_lsa(make_family(p), w)
        if not (r.ok and r.triples_checked == 15625 and r.pairs_checked == 625):
            bad.append(p.describe())
    return not bad, f"{len(params) - len(bad)}/{len(params)} families clean on N=12 (15625 triples, 625 pairs each) {bad}"


# -- 2 ----------------------------------------------------------------------


def check_2():
    w = IndexWindow(6)
    r = verify_lsa(make_family(VAlphaEps(ALPHA, EPS)), w)
    return r.ok and r.triples_checked == 13**3, f"symbolic V_alpha_eps on N=6: {r.triples_checked} triples, {len(r.defects)} defects"


# -- 3 ----------------------------------------------------------------------


def check_3():
    w = IndexWindow(8)
    specs = [FeiginFuchs(ALPHA, EPS), APrime01()]
    specs += [AAlpha(_g(a)) for a in (0, 5, I)]
    specs += [BBeta(_g(b)) for b in (-3, Q(1, 2))]
    bad = [s.describe() for s in specs if not verify_module(s, w).ok]
    return not bad, f"{len(specs) - len(bad)}/{len(specs)} modules clean on N=8 {bad}"


# -- 4 ----------------------------------------------------------------------


def check_4():
    w = IndexWindow(8)
    problems = []
    for eps in (2, 3, Q(2, 3), I):
        A = make_family(VAlphaEps(0, _g(eps)))
        sol = solve_cocycle(A, w)
        if not isinstance(sol, Unique):
            problems.append(f"eps={eps}: {sol.kind}")
            continue
        if any(sol.omega(m, n) != closed_form_omega(eps, m, n) for m, n in sol.region):
            problems.append(f"eps={eps}: table differs from closed form")
        red = reduce_cocycle(A, w)
        if not isinstance(red, ReducedSolution) or any(red.omega(m, n) != sol.omega(m, n) for m, n in sol.region):
            problems.append(f"eps={eps}: reduction disagrees")
        if eps == 2 and (sol.omega(-1, 1) != Q(-1, 16) or sol.omega(-2, 2) != 0):
            problems.append("spot values at eps=2")
    return not problems, f"unique cocycle for eps in {{2, 3, 2/3, i}} at N=8 {problems}"


# -- 5 ----------------------------------------------------------------------


def check_5():
    w = IndexWindow(8)
    cases = [VAlphaEps(_g(a), _g(0)) for a in (0, 1, Q(1, 2))] + [VBetaK(_g(1), 0), VBetaK(_g(-3), 1)]
    problems = []
    for p in cases:
        r = solve_cocycle(make_family(p), w)
        if not (isinstance(r, Infeasible) and r.check()):
            problems.append(p.describe())
    return not problems, f"{len(cases) - len(problems)}/{len(cases)} infeasible with audited witnesses {problems}"


# -- 6 ----------------------------------------------------------------------


def _rand_q(rng, num=6, den=4):
    return Q(rng.randint(-num, num), rng.randint(1, den))


def _rand_g(rng):
    return GaussianRational(_rand_q(rng), _rand_q(rng) if rng.random() < 0.4 else 0)


def random_params(rng, count):
    out = []
    while len(out) < count:
        kind = rng.random()
        if kind < 0.5:
            p = VAlphaEps(_rand_g(rng), _rand_g(rng) if rng.random() < 0.8 else _g(0))
        elif kind < 0.6:
            a = _rand_g(rng)
            if a.is_zero():
                continue
            p = VAlphaEps(a, 1 / a)  # the coincidence V_{a,1/a} = V_{a,0}
        else:
            p = VBetaK(_rand_g(rng), rng.randint(-4, 4))
        if _valid(p):
            out.append(p)
    return out


_DESC = re.compile(r"V_alpha_eps alpha=(\S+) eps=(\S+)|V_beta_k beta=(\S+) k=(-?\d+)")


def _params_from(desc):
    m = _DESC.fullmatch(desc)
    if m[1] is not None:
        return VAlphaEps(parse_gaussian(m[1]), parse_gaussian(m[2]))
    return VBetaK(parse_gaussian(m[3]), int(m[4]))


def _cli(*argv):
    out, err = StringIO(), StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    kv = dict(line.split("=", 1) for line in out.getvalue().splitlines() if "=" in line)
    return code, kv


def check_6():
    rng = random.Random(60_611)
    w = IndexWindow(6)
    params = random_params(rng, 50)
    failures, coincidences = [], 0
    with tempfile.TemporaryDirectory() as d:
        for i, p in enumerate(params):
            path = str(Path(d) / f"t{i}.json")
            flags = ["--alpha", str(p.alpha), "--eps", str(p.eps)] if isinstance(p, VAlphaEps) else ["--beta", str(p.beta), "--k", str(p.k)]
            fam = "v-alpha-eps" if isinstance(p, VAlphaEps) else "v-beta-k"
            code, _ = _cli("gen", "--family", fam, *flags, "-N", "6", "-o", path)
            if code != 0:
                failures.append((p.describe(), "gen", code))
                continue
            code, kv = _cli("classify", path)
            if code != 0 or kv.get("result") != "fitted":
                failures.append((p.describe(), "classify", code))
                continue
            got = _params_from(kv["family"])
            if isomorphic(make_family(got), make_family(p), w) is not Iso.EQUAL:
                failures.append((p.describe(), got.describe()))
            elif got != p:
                coincidences += 1
    return not failures, f"50 random tuples, {50 - len(failures)} recovered ({coincidences} via the V_a0 = V_a,1/a coincidence) {failures}"


# -- 7 ----------------------------------------------------------------------


def _expected_relation(p, q):
    if type(p) is not type(q):
        return Iso.NO
    if isinstance(p, VBetaK):
        if (p.beta, p.k) == (q.beta, q.k):
            return Iso.EQUAL
        if (p.beta, p.k) == (-q.beta, -q.k):
            return Iso.FLIP
        return Iso.NO

    def same(x):
        out = {(x.alpha, x.eps)}
        if x.eps == 0 and x.alpha != 0:
            out.add((x.alpha, 1 / x.alpha))
        if x.eps != 0 and x.alpha == 1 / x.eps:
            out.add((x.alpha, _g(0)))
        return out

    sp, sq = same(p), same(q)
    if sp & sq:
        return Iso.EQUAL
    if {(-a, -e) for a, e in sp} & sq:
        return Iso.FLIP
    return Iso.NO


def check_7():
    w = IndexWindow(12)
    params = grid() + [VAlphaEps(I, -I)]
    tables = {p: make_family(p).f.tabulate(w) for p in params}
    wrong = []
    counts = {Iso.EQUAL: 0, Iso.FLIP: 0, Iso.NO: 0}
    for p, q in itertools.combinations(params, 2):
        got = isomorphic(tables[p], tables[q], w)
        want = _expected_relation(p, q)
        counts[got] += 1
        if got is not want:
            wrong.append((p.describe(), q.describe(), got.name, want.name))
    named = [
        (VAlphaEps(_g(Q(1, 2)), _g(0)), VAlphaEps(_g(Q(1, 2)), _g(2)), Iso.EQUAL),
        (VAlphaEps(I, _g(0)), VAlphaEps(I, -I), Iso.EQUAL),
        (VAlphaEps(_g(0), _g(2)), VAlphaEps(_g(0), _g(-2)), Iso.FLIP),
        (VBetaK(_g(1), 0), VBetaK(_g(-1), 0), Iso.FLIP),
        (VBetaK(_g(-3), 0), VBetaK(_g(3), 0), Iso.FLIP),
    ]
    for p, q, want in named:
        got = isomorphic(make_family(p), make_family(q), w)
        if got is not want:
            wrong.append((p.describe(), q.describe(), got.name, want.name))
    summary = ", ".join(f"{k.name}={v}" for k, v in counts.items())
    return not wrong, f"{len(params)} grid algebras, all pairs classified as expected ({summary}) {wrong[:5]}"


# -- 8 ----------------------------------------------------------------------


def check_8():
    w = IndexWindow(8)
    ok = rescale_basis(make_family(ChapotonA(2)), ConstantScaling(Q(1, 2)), w) == make_family(VAlphaEps(Q(1, 2), 0)).f.tabulate(w)
    for b in (2, Q(2, 3)):
        ok &= rescale_basis(make_family(ChapotonB(b)), AffineScaling(b), w) == make_family(VAlphaEps(0, b)).f.tabulate(w)
    return ok, "A_2 -> V_1/2,0 and B_b -> V_0,b (b = 2, 2/3) entrywise on N=8"


# -- 9 ----------------------------------------------------------------------


def check_9():
    ext = extend_algebra(make_family(VAlphaEps(0, 2)), ClosedFormCocycle(2))
    got = [ext.bracket(-n, n).get(THETA, 0) for n in range(1, 9)]
    want = [Q(n**3 - n, 12) for n in range(1, 9)]
    return got == want and got[1] == Q(1, 2), f"theta part of [x_-n, x_n] for n=1..8: {[str(v) for v in got]}"


# -- 10 ---------------------------------------------------------------------


def _rand_poly(rng):
    terms = {(rng.randint(0, 2), rng.randint(0, 2)): _rand_q(rng, 5, 3) for _ in range(rng.randint(0, 3))}
    return BivariatePolynomial(terms)


def _rand_rf(rng):
    den = _rand_poly(rng)
    while den.is_zero():
        den = _rand_poly(rng)
    return RationalFunction(_rand_poly(rng), den)


def _axioms(x, y, z):
    return (
        x + y == y + x
        and x * y == y * x
        and (x + y) + z == x + (y + z)
        and (x * y) * z == x * (y * z)
        and x * (y + z) == x * y + x * z
        and (x - x).is_zero()
        and (x.is_zero() or x * x.inv() == 1)
    )


def check_10():
    rng = random.Random(101)
    failures = []
    n_g = sum(_axioms(_rand_g(rng), _rand_g(rng), _rand_g(rng)) for _ in range(1000))
    n_r = sum(_axioms(_rand_rf(rng), _rand_rf(rng), _rand_rf(rng)) for _ in range(1000))
    if n_g != 1000 or n_r != 1000:
        failures.append(f"field axioms Q(i) {n_g}/1000, Q(alpha,eps) {n_r}/1000")

    w = IndexWindow(4)
    flips = 0
    for p in random_params(rng, 40):
        t = make_family(p).f.tabulate(w)
        flips += flip(flip(t)) == t
    if flips != 40:
        failures.append(f"flip involution {flips}/40")

    preserved = 0
    cases = random_params(rng, 12)
    scalings = [ConstantScaling(_rand_g(rng) or 1), AffineScaling(Q(2, 3), I), TableScaling({i: i * i + 1 for i in range(-8, 9)})]
    for p in cases:
        t = make_family(p).f.tabulate(w)
        bad = t.with_entry(1, 2, t(1, 2) + 1)
        good_flip = verify_lsa(flip(t), w).ok and not verify_lsa(flip(bad), w).ok
        good_scale = all(
            verify_associator_symmetry(rescale_basis(t, c, w), w).ok
            and not verify_associator_symmetry(rescale_basis(bad, c, w), w).ok
            for c in scalings
        )
        preserved += good_flip and good_scale
    if preserved != len(cases):
        failures.append(f"flip/rescale preservation {preserved}/{len(cases)}")

    f = ClosedForm(lambda m, n: GaussianRational(m * m - 2 * n + 3, m - n))
    same = 0
    for _ in range(1000):
        m, n, p = (rng.randint(-12, 12) for _ in range(3))
        same += regular_rep_defect(f, m, n, p) == -left_symmetry_defect(f, m, n, p)
    if same != 1000:
        failures.append(f"regular_rep = -left_symmetry {same}/1000")
    return not failures, f"field axioms 2x1000, flip involution 40, preservation {len(cases)}x{len(scalings)}, defect identity 1000 {failures}"


CHECKS = [check_1, check_2, check_3, check_4, check_5, check_6, check_7, check_8, check_9, check_10]


@pytest.mark.parametrize("n", range(1, 11))
def test_criterion(n, capsys):
    ok, detail = CHECKS[n - 1]()
    with capsys.disabled():
        print()
        report(n, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    results = []
    for i, chk in enumerate(CHECKS, 1):
        ok, detail = chk()
        report(i, ok, detail)
        results.append(ok)
    sys.exit(0 if all(results) else 1)
