"""Gluing algebras, their modules, the restriction adjoints and K0."""

import json
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidglue.coxeter import CoxeterSystem
from braidglue.errors import AssociativityFailure, CapExceeded, DerivedCorrectionRequired, FieldTooSmall
from braidglue.gluedalg import (
    adjunction_check,
    assemble,
    cokernel_module,
    datum_from_dict,
    extend_shriek,
    extend_star,
    is_module_map,
    k0_verify,
    kernel_module,
    load_shipped,
    middle_extension,
    restrict,
    simple_modules,
    site_dims,
    split,
    support_scan,
    w_gluing_check,
    w_gluing_datum,
)
from braidglue.gluedalg.datum import DATA_DIR
from braidglue.gluedalg.k0 import site_simples, tensor_with_bimodule

from oracles import gf_rank, semisimple_dimension

PLAIN = ["product", "triangular", "matrix", "zero_nu", "split"]


@pytest.fixture(scope="module")
def algebras():
    return {name: assemble(load_shipped(name)) for name in PLAIN}


def raw(name):
    return json.loads((DATA_DIR / f"glue_{name}.json").read_text())


# -- assembly ----------------------------------------------------------------


def test_triangular_is_upper_triangular_matrices(algebras):
    G = algebras["triangular"]
    units = {}
    for (i, j), target in [((0, 0), (0, 0)), ((0, 1), (0, 1)), ((1, 1), (1, 1))]:
        (a,) = range(G.dim)[G.block(i, j)]
        E = np.zeros((2, 2), dtype=np.int64)
        E[target] = 1
        units[a] = E
    assert len(units) == G.dim == 3
    for a, b in product(units, repeat=2):
        prod = units[a] @ units[b]
        expect = sum(G.mult[a, b, c] * units[c] for c in units)
        assert np.array_equal(prod, expect)


def test_product_algebra_is_commutative_split(algebras):
    G = algebras["product"]
    assert G.dim == 3
    assert np.array_equal(G.mult, G.mult.transpose(1, 0, 2))
    assert len(simple_modules(G).modules) == 3


def test_single_site():
    d = {"name": "one", "p": 101, "sites": 1, "algebras": [raw("split")["algebras"][0]], "bimodules": [], "nu": []}
    G = assemble(datum_from_dict(d))
    assert G.dim == 2 and G.n == 1
    S = simple_modules(G)
    assert [s.dim for s in S.modules] == [1, 1]


@pytest.mark.parametrize("name", PLAIN)
def test_associative_and_unital(algebras, name):
    G = algebras[name]
    assert G.is_associative()
    one = sum(G.idempotent(i) for i in range(G.n)) % G.p
    L = np.einsum("a,abc->bc", one, G.mult) % G.p
    assert np.array_equal(L, np.eye(G.dim, dtype=np.int64))


def test_corrupted_nu_fails_associativity():
    d = raw("split")
    d["nu"][0]["tensor"] = [[[2, 0]]]
    with pytest.raises(AssociativityFailure):
        assemble(datum_from_dict(d))


def test_field_too_small():
    G = assemble(load_shipped("product", p=3))
    with pytest.raises(FieldTooSmall):
        simple_modules(G)


def test_cap_exceeded():
    with pytest.raises(CapExceeded):
        assemble(load_shipped("w_a2"), cap=64)


def test_nonprojective_rejected():
    d = json.loads((DATA_DIR / "nonprojective.json").read_text())
    with pytest.raises(DerivedCorrectionRequired):
        k0_verify(datum_from_dict(d))


# -- simple modules ----------------------------------------------------------


@pytest.mark.parametrize("name", PLAIN)
def test_simples_account_for_semisimple_quotient(algebras, name):
    G = algebras[name]
    S = simple_modules(G)
    assert S.certified
    assert sum(s.dim**2 for s in S.modules) == semisimple_dimension(G.mult, G.p)
    rng = np.random.default_rng(5)
    for s in S.modules:
        assert s.check_axioms() and split(s, rng) is None


def test_triangular_simples(algebras):
    S = simple_modules(algebras["triangular"])
    assert [s.dim for s in S.modules] == [1, 1]
    assert [site_dims(s) for s in S.modules] == [[1, 0], [0, 1]]


def test_regular_module_of_matrix_algebra_splits(algebras):
    G = algebras["matrix"]
    sub = split(G.regular_module(), np.random.default_rng(0))
    assert sub is not None and sub.shape[0] == 2


@pytest.mark.parametrize("name", PLAIN)
def test_restriction_of_simples(algebras, name):
    G = algebras[name]
    rng = np.random.default_rng(1)
    for S in simple_modules(G).modules:
        for k in range(G.n):
            R = restrict(S, k)
            assert R.dim == site_dims(S)[k]
            assert R.dim == 0 or split(R, rng) is None


# -- functors ----------------------------------------------------------------


def test_triangular_extensions(algebras):
    G = algebras["triangular"]
    S2 = G.site_algebra(1).regular_module()
    X = extend_shriek(S2, 1, G)
    assert X.dim == 2 and restrict(X, 0).dim == 1 and site_dims(X) == [1, 1]
    assert extend_star(S2, 1, G).dim == 1
    M = middle_extension(S2, 1, G)
    assert M.dim == 1 and restrict(M, 1).is_isomorphic(S2)


def _site_modules(G, k):
    R = G.site_algebra(k)
    return [R.regular_module()] + list(simple_modules(R, cap=None).modules)


def _gamma_modules(G):
    return [G.regular_module()] + list(simple_modules(G).modules)


@pytest.mark.parametrize("name", PLAIN)
def test_adjunction_dimensions(algebras, name):
    G = algebras[name]
    for k in range(G.n):
        for A in _site_modules(G, k):
            for B in _gamma_modules(G):
                assert adjunction_check(A, B, k, G).ok


@pytest.mark.parametrize("name", PLAIN)
def test_middle_extension_recovers_simples(algebras, name):
    G = algebras[name]
    for S in simple_modules(G).modules:
        k = next(i for i, d in enumerate(site_dims(S)) if d)
        assert middle_extension(restrict(S, k), k, G).is_isomorphic(S)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(PLAIN), st.integers(0, 2**32 - 1))
def test_kernel_and_cokernel_are_modules(name, seed):
    G = assemble(load_shipped(name))
    rng = np.random.default_rng(seed)
    k = int(rng.integers(G.n))
    X = extend_shriek(G.site_algebra(k).regular_module(), k, G)
    Y = G.regular_module()
    H = X.hom(Y)
    if not H:
        return
    F = sum(int(rng.integers(G.p)) * h for h in H) % G.p
    assert is_module_map(F, X, Y)
    K = kernel_module(F, X, Y)
    C = cokernel_module(F, X, Y)
    assert K.check_axioms() and C.check_axioms()
    r = gf_rank(F, G.p)
    assert K.dim == X.dim - r and C.dim == Y.dim - r
    # kernels are computed site by site
    dX, dY, dK, dC = site_dims(X), site_dims(Y), site_dims(K), site_dims(C)
    for i in range(G.n):
        assert dX[i] - dK[i] == dY[i] - dC[i]


# -- K0 ----------------------------------------------------------------------


@pytest.mark.parametrize("name", PLAIN)
def test_k0_equality(algebras, name):
    rep = k0_verify(algebras[name])
    assert rep.equal and rep.injective and rep.ok


def test_k0_triangular_values(algebras):
    rep = k0_verify(algebras["triangular"])
    assert sorted(rep.simple_classes) == [[0, 1], [1, 0]]
    assert rep.lattice_K.rank == 2 and rep.lattice_K.index() == 1


@pytest.mark.parametrize("name", PLAIN)
def test_k0_box_membership(algebras, name):
    G = algebras[name]
    rep = k0_verify(G, lemmas=False)
    counts = rep.site_simple_counts
    offs = np.cumsum([0] + counts).tolist()

    def in_K(c):
        for (i, j), mat in rep.phi.items():
            for r in range(counts[i]):
                if r in rep.K_ij[(i, j)]:
                    continue
                val = sum(mat[r][t] * c[offs[j] + t] for t in range(counts[j])) - c[offs[i] + r]
                if val:
                    return False
        return True

    for c in product(range(-2, 3), repeat=offs[-1]):
        assert in_K(c) == (list(c) in rep.lattice_simples)


@pytest.mark.parametrize("name", PLAIN)
def test_phi_matches_dimensions(algebras, name):
    G = algebras[name]
    sims = site_simples(G)
    rep = k0_verify(G, lemmas=False)
    for (i, j), mat in rep.phi.items():
        for t, T in enumerate(sims[j].modules):
            X = tensor_with_bimodule(G, i, j, T)
            assert X.dim == sum(mat[r][t] * sims[i].modules[r].dim for r in range(len(sims[i].modules)))


# -- W-gluing ----------------------------------------------------------------


def test_w_gluing_shipped():
    for name in ("w_a2", "w_b2"):
        d = load_shipped(name)
        assert w_gluing_check(d) == []
        assert support_scan(d).ok


@settings(max_examples=6, deadline=None)
@given(st.lists(st.integers(0, 100), min_size=2, max_size=2))
def test_w_gluing_random_parameters_b2(t):
    W = CoxeterSystem.from_label("B2")
    d = w_gluing_datum(W, [t], 101)
    assert w_gluing_check(d) == []
    rep = support_scan(d)
    assert rep.ok
    assert sum(e.dim for e in rep.entries) >= 1


@settings(max_examples=4, deadline=None)
@given(st.integers(0, 100))
def test_w_gluing_random_parameters_a2(t):
    W = CoxeterSystem.from_label("A2")
    d = w_gluing_datum(W, [[t]], 101)
    assert w_gluing_check(d) == []
    assert support_scan(d).ok
