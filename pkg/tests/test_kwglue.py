"""The space K_W(V), its sections, the alternating identities and goodness."""

from fractions import Fraction
import random

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from braidglue.braidrep import BraidRepresentation, dihedral3_block, dihedral4_block, regular_hecke_rep, sum_of
from braidglue.cli import load_representation, random_one_generator_rep
from braidglue.coxeter import CoxeterSystem
from braidglue.errors import NotASection, NotGood
from braidglue.exact import QQ, Matrix, Subspace
from braidglue.kwglue import (
    augmentation_check,
    chi_pairing,
    coset_maps_check,
    euler_identity_check,
    findi_check,
    gluecheck,
    half_identity_check,
    iota,
    is_good,
    kw_space,
    q8mu_check,
    section_i,
    v_s,
    v_w,
)

from oracles import goodness_oracle, same_column_space, to_sympy, v_w_oracle

A1, A2, B2, A3 = (CoxeterSystem.from_label(x) for x in ("A1", "A2", "B2", "A3"))
SMALL_SHIPPED = ["a1_two", "cubic_a2_q2", "cubic_b2_q2", "hecke_a2_q2", "hecke_b2_q2"]


def scalar_rep(W, values):
    return BraidRepresentation(W, QQ, [[[v]] for v in values])


def test_rank_one_dimensions():
    assert kw_space(scalar_rep(A1, [1])).dim == 1
    assert kw_space(scalar_rep(A1, [2])).dim == 2


def test_rank_one_sections():
    rep = scalar_rep(A1, [2])
    e, s = A1.elements
    assert section_i(rep, e).column(0) == (1, 2)
    assert section_i(rep, s).column(0) == (2, 1)


def test_rank_one_iota():
    rep = scalar_rep(A1, [2])
    M = iota(rep)
    assert M.apply((1, 0)) == (0, 2) and M.apply((0, 1)) == (2, 0)
    assert M @ M == Matrix.identity(QQ, 2).scale(4)


def test_v_s_of_diagonal():
    rep = BraidRepresentation(A1, QQ, [[[2, 0], [0, -1]]])
    assert v_s(rep, 1) == Subspace.span(QQ, 2, [[1, 0]])


def test_v_w_identity_and_sign():
    rep = scalar_rep(A2, [-1, -1])
    assert v_w(rep, A2.element(())).dim == 0
    assert v_w(rep, A2.longest).dim == 0


@pytest.mark.parametrize("name", SMALL_SHIPPED)
def test_kw_dimension_and_goodness_match_oracle(name):
    rep = load_representation(name=name)
    dim, span, inside = goodness_oracle(rep)
    r = is_good(rep)
    assert inside
    assert (r.dim_KW, r.dim_span_of_sections) == (dim, span)


def test_non_good_instance_matches_oracle():
    rep = regular_hecke_rep(A2, -1)
    dim, span, _ = goodness_oracle(rep)
    r = is_good(rep)
    assert (r.dim_KW, r.dim_span_of_sections) == (dim, span)
    assert not r.good and r.cokernel_dim == dim - span > 0
    with pytest.raises(NotGood):
        chi_pairing(rep)


@pytest.mark.parametrize("name", SMALL_SHIPPED + ["hecke_a3_q2"])
def test_v_w_well_defined_and_augmentation(name):
    rep = load_representation(name=name)
    W = rep.system
    for w in W.elements:
        V = v_w(rep, w, check=True)
        for word in W.reduced_words(w, limit=4):
            mine = sp.Matrix([[sp.Rational(x) for x in r] for r in V.rows]).T if V.dim else sp.zeros(rep.dim, 0)
            assert same_column_space(mine, v_w_oracle(rep, word))
    assert augmentation_check(rep)


@pytest.mark.parametrize("name", ["cubic_a2_q2", "cubic_b2_q2", "hecke_a2_q2", "hecke_b2_q2"])
def test_alternating_identities(name):
    rep = load_representation(name=name)
    assert euler_identity_check(rep)
    for i in range(1, rep.system.rank + 1):
        assert half_identity_check(rep, i)


def test_alternating_identities_trivial():
    rep = scalar_rep(A2, [1, 1])
    assert euler_identity_check(rep) and half_identity_check(rep, 1)
    assert euler_identity_check(scalar_rep(A1, [2]))


def test_coset_maps():
    rep = load_representation(name="hecke_a2_q2")
    for J in ([1], [2]):
        for x in rep.system.right_coset_reps(J):
            out = coset_maps_check(rep, J, x)
            assert out["roundtrip"] and out["section_in_KW"] and out["projection_in_sub"]


def test_chi_rank_one():
    rep = scalar_rep(A1, [2])
    dual = scalar_rep(A1, [2])
    rep_dual = rep.dual()
    assert rep_dual.gens[0] == dual.gens[0]
    r = chi_pairing(rep)
    assert r.gram.nrows == r.gram.ncols == 2 and r.ok


def test_chi_trivial_a2():
    r = chi_pairing(scalar_rep(A2, [1, 1]))
    assert r.ok and r.gram.nrows == 1


@pytest.mark.parametrize("name", ["cubic_a2_q2", "cubic_b2_q2", "hecke_a2_q2", "hecke_b2_q2"])
def test_chi_shipped(name):
    r = chi_pairing(load_representation(name=name))
    assert r.nonsingular and r.left_identity and r.right_identity


def test_chi_gram_determinant_via_sympy():
    r = chi_pairing(load_representation(name="cubic_b2_q2"))
    assert to_sympy(r.gram).det() != 0


def test_gluecheck_detects_inequality():
    one = Fraction(1)
    K = Subspace.full(QQ, 2)
    i0 = Matrix.from_rows(QQ, [[one], [one]])
    i1 = Matrix.from_rows(QQ, [[one], [one]])
    r = gluecheck(1, 1, K, i0, i1)
    assert r.dim_V_phi == 0 and r.dim_K_h == 2 and not r.V_phi_equals_K_h and r.consistent
    with pytest.raises(NotASection):
        gluecheck(1, 1, K, Matrix.from_rows(QQ, [[2], [1]]), i1)


def test_b2_eigenvector_statements():
    rep = load_representation(name="cubic_b2_q2")
    assert q8mu_check(rep, 2)["holds"]
    assert findi_check(rep, 2)["stable"]


# -- goodness of families of representations, as properties ----------------


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_one_generator_representations_are_good(seed):
    rep = random_one_generator_rep(random.Random(seed))
    r = is_good(rep)
    assert r.good and r.dim_KW == goodness_oracle(rep)[0]


A2_BLOCKS = [(1, -1), (-1, 1), (2, 1), (1, 2), (2, -1), (-1, 2)]
A2_SCALARS = [1, -1, 2]


@settings(max_examples=15, deadline=None)
@given(st.lists(st.sampled_from(A2_BLOCKS), max_size=2), st.lists(st.sampled_from(A2_SCALARS), max_size=2))
def test_cubic_a2_sums_are_good(blocks, scalars):
    parts = [dihedral3_block(a, b, system=A2) for a, b in blocks] + [scalar_rep(A2, [c, c]) for c in scalars]
    if not parts:
        return
    rep = sum_of(parts)
    assert rep.check_cubic(2)
    assert is_good(rep, 2).good


B2_BLOCKS = [(1, 2, -1, 2), (2, -1, 2, 1), (1, -1, 2, 1), (2, 1, 1, -1)]
B2_SCALARS = [(2, -1), (1, 2), (-1, -1), (2, 2)]


@settings(max_examples=15, deadline=None)
@given(st.lists(st.sampled_from(B2_BLOCKS), max_size=2), st.lists(st.sampled_from(B2_SCALARS), max_size=2))
def test_cubic_b2_sums_are_good(blocks, scalars):
    parts = [dihedral4_block(*b, system=B2) for b in blocks] + [scalar_rep(B2, list(c)) for c in scalars]
    if not parts:
        return
    rep = sum_of(parts)
    assert rep.check_cubic(2)
    assert is_good(rep, 2).good


def test_regular_hecke_good():
    for W in (A2, B2):
        assert is_good(regular_hecke_rep(W, 2), 2).good
