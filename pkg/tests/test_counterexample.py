"""The length matrix determinant and the divisibility obstruction."""

import sympy as sp

import pytest

from braidglue.counterexample import (
    PHI6,
    build_M,
    divisibility_analysis,
    euler_consistency,
    poincare,
    rational_solution,
)
from braidglue.coxeter import CoxeterSystem
from braidglue.errors import CapExceeded, SizeMismatch
from braidglue.exact import LaurentPoly, reduce_mod

U = sp.Symbol("u")
A1, A2, B2 = (CoxeterSystem.from_label(x) for x in ("A1", "A2", "B2"))


def sympy_length_matrix(W):
    els = W.elements
    return sp.Matrix([[(-U) ** (b * a.inverse()).length for b in els] for a in els])


def to_sympy(p: LaurentPoly):
    return sum(sp.Integer(int(c)) * U**e for e, c in p.terms())


def test_a2_matrix_entries():
    M = build_M(A2)
    allowed = {LaurentPoly.parse(s) for s in ("1", "-u", "u^2", "-u^3")}
    assert M.nrows == M.ncols == 6
    assert {x for r in M.data for x in r} == allowed


@pytest.mark.parametrize("W", [A1, A2, B2])
def test_determinant_matches_sympy(W):
    r = divisibility_analysis(W)
    assert sp.expand(to_sympy(r.det_M) - sympy_length_matrix(W).det()) == 0


def test_poincare_polynomials():
    assert poincare(A2) == LaurentPoly.parse("1 + 2u + 2u^2 + u^3")
    assert poincare(A2, signed=True) == LaurentPoly.parse("1 - 2u + 2u^2 - u^3")


def test_a2_obstruction():
    r = divisibility_analysis(A2)
    assert r.divisible_by_poincare and r.divisible_by_signed
    assert r.det_mod_phi6.is_zero()
    assert str(r.p_mod_phi6) == "4-2u"
    assert r.verdict == "unsolvable"
    # sympy agrees on both divisibilities
    det = sympy_length_matrix(A2).det()
    for f in ("1 + 2u + 2u^2 + u^3", "1 - 2u + 2u^2 - u^3"):
        assert sp.rem(det, to_sympy(LaurentPoly.parse(f)), U) == 0
    assert sp.rem(det, U**2 - U + 1, U) == 0
    assert sp.rem((1 - U**2) * (1 - U**3), U**2 - U + 1, U) != 0


def test_residues():
    assert reduce_mod(LaurentPoly.parse("1 - u^3"), PHI6) == LaurentPoly.constant(2)
    assert reduce_mod(LaurentPoly.parse("1 - 2u + 2u^2 - u^3"), PHI6).is_zero()


def test_rank_one_has_no_obstruction():
    r = divisibility_analysis(A1)
    assert r.det_M == LaurentPoly.parse("1 - u^2")
    assert r.verdict == "no obstruction at phi6"
    u = LaurentPoly.u()
    rep = euler_consistency(A1, [[LaurentPoly.constant(1), u], [u, LaurentPoly.constant(1)]], LaurentPoly.parse("1 - u^2"))
    assert rep.ok


def test_b2_exploratory():
    r = divisibility_analysis(B2)
    assert r.divisible_by_poincare and r.divisible_by_signed
    assert r.p_G is None and r.verdict == "no verdict"


def test_rational_solution_not_polynomial():
    pG = LaurentPoly.parse("1 - u^2") * LaurentPoly.parse("1 - u^3")
    E = rational_solution(A2, pG)
    rep = euler_consistency(A2, E, pG)
    assert rep.holds and not rep.polynomial_entries


def test_errors():
    with pytest.raises(CapExceeded):
        divisibility_analysis(CoxeterSystem.from_label("A4"))
    with pytest.raises(SizeMismatch):
        euler_consistency(A1, [[1]], LaurentPoly.parse("1 - u^2"))
