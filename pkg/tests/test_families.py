from fractions import Fraction

import pytest
import sympy as sp

import oracles
from prelie_witt.families import (
    AAlpha,
    APrime01,
    BBeta,
    ChapotonA,
    ChapotonB,
    FeiginFuchs,
    InvalidIndexError,
    InvalidParameterError,
    Novikov,
    PatchedModule,
    VAlphaEps,
    VBetaK,
    W1,
    identity_cocycle_defect,
    make_family,
    verify_module,
)
from prelie_witt.field import ALPHA, EPS, I, DenominatorVanishesError, GaussianRational
from prelie_witt.witt import IndexWindow, verify_lsa


def test_frozen_values():
    assert make_family(VAlphaEps(0, 2)).f(1, 1) == Fraction(3, 5)
    assert make_family(VAlphaEps(0, 2)).f(2, -1) == Fraction(1, 3)
    # anti-diagonal of V^{1,0}: (n)(1 - n)/1 at n = 2
    assert make_family(VBetaK(1, 0)).f(-2, 2) == -2
    assert make_family(VBetaK(1, 0)).f(-1, 1) == 0
    assert make_family(VBetaK(-3, 1)).f(-3, 2) == Fraction(3 * (-3 - 3), -4)
    assert make_family(W1()).f(5, 2) == 3
    assert make_family(Novikov(Fraction(1, 2))).f(4, 1) == Fraction(3, 2)
    assert make_family(ChapotonA(2)).f(3, 4) == 9
    assert make_family(ChapotonB(2)).f(1, 3) == 1


@pytest.mark.parametrize(
    "alpha,eps",
    [(0, 2), (1, 0), (Fraction(1, 2), Fraction(2, 3)), (I, -2), (-2, I)],
)
def test_values_match_sympy(alpha, eps):
    A = make_family(VAlphaEps(alpha, eps))
    sa = oracles.to_sympy(GaussianRational.coerce(alpha))
    se = oracles.to_sympy(GaussianRational.coerce(eps))
    for m in range(-4, 5):
        for n in range(-4, 5):
            assert sp.simplify(oracles.to_sympy(A.f(m, n)) - oracles.vae(sa, se, m, n)) == 0


def test_vbk_matches_sympy():
    beta = GaussianRational(Fraction(1, 2), 1)
    A = make_family(VBetaK(beta, -2))
    sb = oracles.to_sympy(beta)
    for m in range(-5, 6):
        for n in range(-5, 6):
            assert sp.simplify(oracles.to_sympy(A.f(m, n)) - oracles.vbk(sb, -2, m, n)) == 0


def test_symbolic_identity_against_sympy():
    # the oracle proves the left-symmetry identity for V_{alpha, eps} as a rational function
    f = lambda m, n: oracles.vae(oracles.a, oracles.e, m, n)  # noqa: E731
    for m, n, l in [(1, 2, 3), (-2, 1, 4), (3, -3, 1), (0, 2, -5)]:
        assert oracles.is_zero(oracles.left_symmetry(f, m, n, l))


def test_symbolic_family_matches_sympy():
    A = make_family(VAlphaEps(ALPHA, EPS))
    for m, n in [(1, 1), (-3, 2), (4, -1)]:
        got = oracles.to_sympy(A.f(m, n))
        assert sp.cancel(got - oracles.vae(oracles.a, oracles.e, m, n)) == 0


def test_parameter_validation():
    for bad in (1, -1, Fraction(1, 3), Fraction(-1, 5)):
        with pytest.raises(InvalidParameterError):
            make_family(VAlphaEps(0, bad))
    with pytest.raises(InvalidParameterError):
        make_family(VBetaK(1, 1))
    with pytest.raises(InvalidParameterError):
        make_family(VBetaK(2, 1.5))
    with pytest.raises(InvalidParameterError):
        make_family(ChapotonB(Fraction(1, 2)))
    # valid borderline values
    make_family(VAlphaEps(0, 0))
    make_family(VAlphaEps(0, Fraction(2, 3)))
    make_family(VAlphaEps(ALPHA, EPS))


def test_describe():
    assert VAlphaEps(0, 2).describe() == "V_alpha_eps alpha=0 eps=2"
    assert VBetaK(Fraction(1, 2) + I, -2).describe() == "V_beta_k beta=1/2+1i k=-2"
    assert W1().describe() == "W1"


def test_identity_cocycle():
    A = make_family(VAlphaEps(Fraction(1, 2), 2))
    assert all(identity_cocycle_defect(A, m, n) == 0 for m in range(-4, 5) for n in range(-4, 5))
    B = make_family(ChapotonA(2))
    assert identity_cocycle_defect(B, 1, 2) != 0


def test_w1_is_v10():
    w = IndexWindow(5)
    a, b = make_family(W1()), make_family(VAlphaEps(1, 0))
    assert all(a.f(m, n) == b.f(m, n) for m, n in w.pairs())


def test_families_verify_small_window():
    w = IndexWindow(5)
    for p in (VAlphaEps(I, Fraction(2, 3)), VBetaK(-3, 1), Novikov(I), W1()):
        assert verify_lsa(make_family(p), w).ok


def test_corrupted_family_fails():
    w = IndexWindow(4)
    T = make_family(VBetaK(1, 0)).f.tabulate(w).with_entry(-2, 2, 5)
    r = verify_lsa(T, w)
    assert not r.ok


def test_raw_denominator_zero_reported():
    from prelie_witt.families import _vae

    f = _vae(GaussianRational(0), GaussianRational(Fraction(1, 2)))
    with pytest.raises(DenominatorVanishesError) as info:
        f(-1, -1)
    assert info.value.point == (-1, -1)


# -- modules -------------------------------------------------------------------


@pytest.mark.parametrize(
    "spec",
    [
        FeiginFuchs(0, 1),
        FeiginFuchs(Fraction(1, 3), I),
        FeiginFuchs(ALPHA, EPS),
        APrime01(),
        AAlpha(0),
        AAlpha(5),
        AAlpha(I),
        BBeta(-3),
        BBeta(Fraction(1, 2)),
    ],
)
def test_modules_verify(spec):
    assert verify_module(spec, IndexWindow(6)).ok


def test_module_values():
    assert FeiginFuchs(Fraction(1, 2), 2).action(3, 1) == Fraction(15, 2)
    assert AAlpha(5).action(2, 0) == 14
    assert AAlpha(5).action(2, 3) == 5
    assert BBeta(-3).action(2, -2) == -2 * (-3 + 2)
    assert BBeta(-3).action(2, 4) == 4
    with pytest.raises(InvalidIndexError):
        APrime01().action(1, 0)


def test_prime_module_never_hits_v0():
    # x_i v_{-i} = (-i + i) v_0 = 0, so the missing v_0 is harmless
    r = verify_module(APrime01(), IndexWindow(5))
    assert r.ok and r.triples_skipped == 11 * 11


def test_patched_module_is_caught():
    r = verify_module(PatchedModule(BBeta(-3), {(1, 2): 7}), IndexWindow(4))
    assert not r.ok
    assert any(d.indices[2] in (1, 2) or 2 in d.indices for d in r.defects)


def test_bad_module_landing_on_missing_vector():
    bad = PatchedModule(APrime01(), {(1, -1): 1})
    r = verify_module(bad, IndexWindow(3))
    assert r.errors
