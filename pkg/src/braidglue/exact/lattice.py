"""Integer lattices in Z^n, stored by row-style Hermite normal form.

>>> L = IntegerLattice.from_generators(1, [[2]]) & IntegerLattice.from_generators(1, [[3]])
>>> L.basis
((6,),)
>>> lattice_preimage_condition([[2]], IntegerLattice.from_generators(1, [[3]])).index()
3
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Integral

from ..errors import AmbientMismatch, NonInteger


def _as_int(x):
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, Integral):
        return int(x)
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    if hasattr(x, "is_constant") and x.is_constant():
        return _as_int(x.constant_term())
    raise NonInteger(f"non-integer entry {x!r}")


def _int_rows(rows, ncols=None):
    out = [[_as_int(x) for x in r] for r in rows]
    if ncols is not None and any(len(r) != ncols for r in out):
        raise AmbientMismatch("row length differs from ambient dimension")
    return out


def hnf_with_transform(rows, ncols):
    """Row HNF of an integer matrix.

    Returns (H, U, rank) with U unimodular and U*A = H stacked over zero rows;
    rows ``U[rank:]`` span the integer left kernel of A.  Pivots of H are
    positive and entries above a pivot lie in [0, pivot).
    """
    H = [list(r) for r in rows]
    m = len(H)
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    r = 0
    for c in range(ncols):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if H[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(H[i][c]))
            H[r], H[piv] = H[piv], H[r]
            U[r], U[piv] = U[piv], U[r]
            clean = True
            hr, ur = H[r], U[r]
            for i in range(r + 1, m):
                if H[i][c]:
                    q = H[i][c] // hr[c]
                    if q:
                        H[i] = [a - q * b for a, b in zip(H[i], hr)]
                        U[i] = [a - q * b for a, b in zip(U[i], ur)]
                    if H[i][c]:
                        clean = False
            if clean:
                break
        if r < m and H[r][c]:
            if H[r][c] < 0:
                H[r] = [-a for a in H[r]]
                U[r] = [-a for a in U[r]]
            p = H[r][c]
            for i in range(r):
                q = H[i][c] // p
                if q:
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
            r += 1
    return H, U, r


def hnf(rows, ncols):
    H, _, r = hnf_with_transform(_int_rows(rows, ncols), ncols)
    return [tuple(h) for h in H[:r]]


def integer_left_kernel(rows, ncols):
    """Basis (HNF) of {c in Z^m : c * A = 0}."""
    rows = _int_rows(rows, ncols)
    m = len(rows)
    _, U, r = hnf_with_transform(rows, ncols)
    return hnf(U[r:], m)


class IntegerLattice:
    """Subgroup of Z^n given by an HNF basis (rows)."""

    __slots__ = ("ambient", "basis")

    def __init__(self, ambient, basis):
        self.ambient = ambient
        self.basis = tuple(tuple(b) for b in basis)

    @classmethod
    def from_generators(cls, ambient, gens):
        gens = list(gens)
        if not gens:
            return cls(ambient, ())
        return cls(ambient, hnf(gens, ambient))

    @classmethod
    def full(cls, n):
        return cls(n, [[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n):
        return cls(n, ())

    @classmethod
    def coordinate(cls, n, coords):
        """Sublattice spanned by the standard basis vectors e_c, c in coords."""
        return cls.from_generators(n, [[int(j == c) for j in range(n)] for c in coords])

    @property
    def rank(self):
        return len(self.basis)

    def index(self):
        """[Z^n : L] for full-rank L, else None."""
        if self.rank != self.ambient:
            return None
        d = 1
        for i, b in enumerate(self.basis):
            d *= b[i]
        return d

    def _check(self, other):
        if self.ambient != other.ambient:
            raise AmbientMismatch(f"ambient {self.ambient} vs {other.ambient}")

    def __add__(self, other):
        self._check(other)
        return IntegerLattice.from_generators(self.ambient, list(self.basis) + list(other.basis))

    def __and__(self, other):
        self._check(other)
        if not self.basis or not other.basis:
            return IntegerLattice.zero(self.ambient)
        stacked = list(self.basis) + [[-x for x in b] for b in other.basis]
        ker = integer_left_kernel(stacked, self.ambient)
        k = len(self.basis)
        gens = []
        for c in ker:
            v = [0] * self.ambient
            for coeff, b in zip(c[:k], self.basis):
                if coeff:
                    v = [a + coeff * x for a, x in zip(v, b)]
            gens.append(v)
        return IntegerLattice.from_generators(self.ambient, gens)

    def __contains__(self, v):
        v = [_as_int(x) for x in v]
        if len(v) != self.ambient:
            raise AmbientMismatch("vector length differs from ambient dimension")
        for b in self.basis:
            p = next(j for j, x in enumerate(b) if x)
            if v[p] % b[p]:
                return False
            q = v[p] // b[p]
            if q:
                v = [a - q * x for a, x in zip(v, b)]
        return not any(v)

    def __le__(self, other):
        self._check(other)
        return all(b in other for b in self.basis)

    def __eq__(self, other):
        if not isinstance(other, IntegerLattice):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return f"IntegerLattice(ambient={self.ambient}, basis={[list(b) for b in self.basis]})"

    def preimage(self, A):
        """{x in Z^n : A x in self} for an integer matrix A (rows x n)."""
        A = _int_rows(A)
        m = len(A)
        if m != self.ambient:
            raise AmbientMismatch("matrix rows differ from lattice ambient")
        n = len(A[0]) if A else 0
        # solve x^T A^T - y^T B = 0 over Z
        At = [[A[i][j] for i in range(m)] for j in range(n)]
        stacked = At + [[-x for x in b] for b in self.basis]
        ker = integer_left_kernel(stacked, m)
        return IntegerLattice.from_generators(n, [c[:n] for c in ker])

    def project(self, coords):
        """Image under the coordinate projection onto ``coords``."""
        return IntegerLattice.from_generators(len(coords), [[b[c] for c in coords] for b in self.basis])


def lattice_image(M):
    """Image of the integer matrix M : Z^cols -> Z^rows (its column span)."""
    rows = _int_rows(M)
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    return IntegerLattice.from_generators(nrows, [[rows[i][j] for i in range(nrows)] for j in range(ncols)])


def lattice_sum(A, B):
    return A + B


def lattice_intersect(A, B):
    return A & B


def lattice_membership(L, v):
    return v in L


def lattice_preimage_condition(M, L):
    """{(x, y) : M x - y in L} as a lattice in Z^cols x Z^rows.

    Generated by (e_i, M e_i) and (0, l) for l in L."""
    rows = _int_rows(M)
    m = len(rows)
    if m != L.ambient:
        raise AmbientMismatch("matrix rows differ from lattice ambient")
    n = len(rows[0]) if rows else 0
    gens = []
    for i in range(n):
        gens.append([int(j == i) for j in range(n)] + [rows[r][i] for r in range(m)])
    for b in L.basis:
        gens.append([0] * n + list(b))
    return IntegerLattice.from_generators(n + m, gens)
