"""Exact scalars, matrices, lattices and the F_p layer against independent oracles."""

from fractions import Fraction
from itertools import product

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from braidglue.errors import AmbientMismatch, DivisionByZero, NotSquare
from braidglue.exact import (
    QQ,
    QQu,
    ZZu,
    IntegerLattice,
    LaurentPoly,
    Matrix,
    PrimeField,
    Subspace,
    lattice_image,
    poly_divrem,
    reduce_mod,
)
from braidglue.exact import modp
from braidglue.exact.matrix import det_bareiss, det_cofactor, det_gauss, det_laurent_bareiss

U = sp.Symbol("u")

small = st.integers(-4, 4)
laurent = st.dictionaries(st.integers(-3, 3), st.integers(-5, 5), max_size=4).map(LaurentPoly)


def to_sympy(a: LaurentPoly):
    return sum(sp.Integer(int(c)) * U**e for e, c in a.terms())


# -- Laurent polynomials -------------------------------------------------------


@given(laurent, laurent, laurent)
def test_laurent_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a - a == LaurentPoly()


@given(laurent, laurent)
def test_laurent_product_matches_sympy(a, b):
    assert sp.expand(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0


def test_parse_and_print_round_trip():
    p = LaurentPoly.parse("1 - 2u + 2u^2 - u^3")
    assert LaurentPoly.parse(str(p)) == p
    assert LaurentPoly.parse("u^-1 + 3") * LaurentPoly.u() == LaurentPoly.parse("1 + 3u")


@given(laurent.filter(lambda a: a.is_polynomial()), laurent.filter(lambda m: m.is_polynomial() and not m.is_zero()))
def test_divrem_identity(a, m):
    q, r = poly_divrem(a, m)
    assert q * m + r == a
    assert r.is_zero() or r.degree() < m.degree()


@given(laurent)
def test_reduce_mod_matches_sympy_remainder(a):
    m = LaurentPoly.parse("u^2 - u + 1")
    r = reduce_mod(a, m)
    k = max(0, -a.valuation()) if not a.is_zero() else 0
    # u^k r == u^k a  mod m, checked through sympy polynomial remainders
    lhs = sp.rem(sp.expand(to_sympy(a) * U**k), to_sympy(m), U)
    rhs = sp.rem(sp.expand(to_sympy(r) * U**k), to_sympy(m), U)
    assert sp.expand(lhs - rhs) == 0
    assert r.is_zero() or (r.valuation() >= 0 and r.degree() < 2)


def test_rational_function_arithmetic():
    f = QQu.parse("(1 - u^2)/(1 - u)")
    assert f.is_laurent()
    assert f == QQu.parse("1 + u")
    g = QQu(1) / QQu.parse("1 + u")
    assert not g.is_laurent()


# -- matrices ----------------------------------------------------------------

int_matrix = st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n))


@given(int_matrix)
def test_determinants_agree_with_cofactor_expansion(rows):
    A = Matrix.from_rows(QQ, rows)
    d = det_cofactor(A)
    assert det_gauss(A) == d
    assert det_bareiss(A) == d
    assert d == sp.Matrix(rows).det()


@settings(max_examples=40)
@given(st.integers(1, 3).flatmap(lambda n: st.lists(st.lists(laurent, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_laurent_bareiss_matches_cofactor(rows):
    A = Matrix.from_rows(ZZu, rows)
    assert det_laurent_bareiss(A) == det_cofactor(A)


@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=5))
def test_rank_nullity_and_kernel(rows):
    A = Matrix.from_rows(QQ, rows)
    K = A.kernel()
    assert A.rank() + K.dim == A.ncols
    for v in K.basis():
        assert all(x == 0 for x in A.apply(v))
    assert A.rank() == sp.Matrix(rows).rank()


@given(
    st.lists(st.lists(small, min_size=4, max_size=4), max_size=4),
    st.lists(st.lists(small, min_size=4, max_size=4), max_size=4),
)
def test_subspace_dimension_formula(a, b):
    U1 = Subspace.span(QQ, 4, a)
    U2 = Subspace.span(QQ, 4, b)
    assert (U1 + U2).dim + (U1 & U2).dim == U1.dim + U2.dim
    assert (U1 & U2) <= U1 and U1 <= U1 + U2


def test_inverse_and_errors():
    A = Matrix.from_rows(QQ, [[2, 1], [1, 1]])
    assert A @ A.inverse() == Matrix.identity(QQ, 2)
    with pytest.raises(DivisionByZero):
        Matrix.from_rows(QQ, [[1, 2], [2, 4]]).inverse()
    with pytest.raises(NotSquare):
        Matrix.from_rows(QQ, [[1, 2]]).det()


def test_prime_field_matrix():
    F = PrimeField(7)
    A = Matrix.from_rows(F, [[1, 2], [2, 4]])
    assert A.rank() == 1
    assert F(3) * F(5) == F(1)


# -- lattices ----------------------------------------------------------------


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=4), st.lists(small, min_size=3, max_size=3))
def test_lattice_membership_brute_force(gens, v):
    L = IntegerLattice.from_generators(3, gens)
    brute = any(
        all(sum(c * g[k] for c, g in zip(cs, gens)) == v[k] for k in range(3))
        for cs in product(range(-6, 7), repeat=len(gens))
    )
    if brute:
        assert v in L
    assert all(g in L for g in gens)


@given(st.lists(st.lists(small, min_size=2, max_size=2), min_size=2, max_size=2))
def test_lattice_index_is_absolute_determinant(rows):
    L = IntegerLattice.from_generators(2, rows)
    d = abs(rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0])
    assert L.index() == (d if d else None)


def test_lattice_preimage_brute_force():
    A = [[1, 2, 0], [0, 1, 3]]
    L = IntegerLattice.from_generators(2, [[2, 0], [0, 3]])
    P = L.preimage(A)
    for x in product(range(-3, 4), repeat=3):
        img = [sum(A[r][c] * x[c] for c in range(3)) for r in range(2)]
        assert (list(x) in P) == (img in L)


def test_lattice_ops_and_mismatch():
    A = IntegerLattice.from_generators(2, [[2, 0], [0, 2]])
    B = IntegerLattice.from_generators(2, [[3, 0], [0, 1]])
    assert (A & B) == IntegerLattice.from_generators(2, [[6, 0], [0, 2]])
    assert (A + B) == IntegerLattice.full(2)
    assert lattice_image([[1, 1], [0, 2]]) == IntegerLattice.from_generators(2, [[1, 0], [1, 2]])
    with pytest.raises(AmbientMismatch):
        A & IntegerLattice.full(3)


# -- F_p linear algebra ------------------------------------------------------

P = 101
square = st.integers(1, 7).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, P - 1), min_size=n, max_size=n), min_size=n, max_size=n)
)


@given(square)
def test_charpoly_matches_sympy(rows):
    expect = [int(c) % P for c in sp.Matrix(rows).charpoly().all_coeffs()]
    assert modp.charpoly(np.array(rows), P) == expect


@given(square)
def test_cayley_hamilton_mod_p(rows):
    A = np.array(rows)
    assert not modp.poly_at_matrix(modp.charpoly(A, P), A, P).any()


@given(st.lists(st.lists(st.integers(0, P - 1), min_size=5, max_size=5), min_size=1, max_size=6))
def test_nullspace_and_rank_mod_p(rows):
    A = np.array(rows)
    N = modp.nullspace(A, P)
    assert N.shape[0] + modp.rank(A, P) == 5
    assert not modp.matmul(A, N.T, P).any()


@given(square)
def test_inverse_and_solve_mod_p(rows):
    A = np.array(rows)
    n = A.shape[0]
    if modp.rank(A, P) < n:
        with pytest.raises(ZeroDivisionError):
            modp.inverse(A, P)
        return
    Ai = modp.inverse(A, P)
    assert np.array_equal(modp.matmul(A, Ai, P), np.eye(n, dtype=np.int64))
    b = np.arange(n) % P
    x = modp.solve(A, b, P)
    assert np.array_equal(modp.matmul(A, x, P)[:, 0], b)


def test_solve_reports_inconsistency():
    assert modp.solve(np.array([[1, 1], [1, 1]]), np.array([0, 1]), 7) is None


def test_large_prime_product_is_exact():
    p = 2**31 - 1
    A = np.full((3, 3), p - 1)
    expect = (np.array(A, dtype=object) @ np.array(A, dtype=object)) % p
    assert np.array_equal(modp.matmul(A, A, p), expect.astype(np.int64))


def test_fraction_backend():
    assert QQ("3/6") == Fraction(1, 2)


@given(st.lists(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=4, max_size=4), min_size=1, max_size=5))
def test_rational_rref_matches_sympy(rows):
    R, piv = Matrix.from_rows(QQ, rows).rref()
    S, spiv = sp.Matrix([[sp.Rational(x.numerator, x.denominator) for x in r] for r in rows]).rref()
    assert list(piv) == list(spiv)
    for i in range(len(piv)):
        assert [sp.Rational(x.numerator, x.denominator) for x in R.data[i]] == list(S.row(i))
