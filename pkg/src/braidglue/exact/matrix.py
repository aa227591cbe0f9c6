"""Dense exact matrices and subspaces in canonical echelon form.

Vectors are tuples of ring elements and matrices act on column vectors.

>>> A = Matrix.from_rows(QQ, [[1, 2], [2, 1]])
>>> A.det()
Fraction(-3, 1)
>>> A.kernel().dim
0
>>> Subspace.span(QQ, 2, [(1, 0), (1, 1)]) == Subspace.full(QQ, 2)
True
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from itertools import permutations
from math import gcd, lcm

from ..errors import AmbientMismatch, KindMismatch, NotSquare
from .scalars import QQ, ZZu, LaurentPoly, dense_exact_div, dense_mul, dense_sub


def _check_ring(a, b):
    if a != b:
        raise KindMismatch(f"{a!r} vs {b!r}")


def rref_rows(rows, ncols, one):
    """Reduced row echelon form of a list of rows; returns (rows, pivots).

    Zero rows are dropped, so ``len(rows) == len(pivots)`` on return."""
    if isinstance(one, Fraction):
        return _rref_rows_rational(rows, ncols)
    rows = [list(r) for r in rows]
    m = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        piv = None
        for i in range(r, m):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pr = rows[r]
        lead = pr[c]
        if lead != 1:
            inv = one / lead
            pr = [x * inv if x else x for x in pr]
            rows[r] = pr
        nz = [j for j in range(c, ncols) if pr[j]]
        for i in range(m):
            if i != r:
                ri = rows[i]
                f = ri[c]
                if f:
                    for j in nz:
                        ri[j] = ri[j] - f * pr[j]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _primitive(row):
    g = reduce(gcd, row, 0)
    return [x // g for x in row] if g > 1 else row


def _rref_rows_rational(rows, ncols):
    """rref_rows over Q through integer rows kept primitive; the echelon
    form is unique, so only the final normalization uses fractions."""
    ints = []
    for r in rows:
        r = [x if isinstance(x, Fraction) else Fraction(x) for x in r]
        den = reduce(lcm, (x.denominator for x in r if x), 1)
        ints.append(_primitive([x.numerator * (den // x.denominator) for x in r]))
    m = len(ints)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        piv = next((i for i in range(r, m) if ints[i][c]), None)
        if piv is None:
            continue
        ints[r], ints[piv] = ints[piv], ints[r]
        pr = ints[r]
        lead = pr[c]
        nz = [j for j in range(c, ncols) if pr[j]]
        for i in range(m):
            if i != r and ints[i][c]:
                ri = ints[i]
                f = ri[c]
                g = gcd(lead, f)
                a, b = lead // g, f // g
                new = [a * x for x in ri]
                for j in nz:
                    new[j] -= b * pr[j]
                ints[i] = _primitive(new)
        pivots.append(c)
        r += 1
    out = []
    for row, p in zip(ints[:r], pivots):
        lead = row[p]
        out.append([Fraction(x, lead) if x else Fraction(0) for x in row])
    return out, pivots


class Matrix:
    """Dense matrix over a ring object (see ``scalars``)."""

    __slots__ = ("ring", "nrows", "ncols", "data")

    def __init__(self, ring, data, nrows=None, ncols=None):
        self.ring = ring
        self.data = data
        self.nrows = len(data) if nrows is None else nrows
        self.ncols = (len(data[0]) if data else 0) if ncols is None else ncols

    # -- constructors
    @classmethod
    def from_rows(cls, ring, rows, ncols=None):
        data = [[ring(x) for x in row] for row in rows]
        if ncols is None:
            ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged rows")
        return cls(ring, data, len(data), ncols)

    @classmethod
    def from_columns(cls, ring, cols, nrows):
        cols = [list(c) for c in cols]
        data = [[ring(c[i]) for c in cols] for i in range(nrows)]
        return cls(ring, data, nrows, len(cols))

    @classmethod
    def zeros(cls, ring, nrows, ncols):
        return cls(ring, [[ring.zero] * ncols for _ in range(nrows)], nrows, ncols)

    @classmethod
    def identity(cls, ring, n):
        data = [[ring.zero] * n for _ in range(n)]
        for i in range(n):
            data[i][i] = ring.one
        return cls(ring, data, n, n)

    @classmethod
    def scalar(cls, ring, n, c):
        data = [[ring.zero] * n for _ in range(n)]
        c = ring(c)
        for i in range(n):
            data[i][i] = c
        return cls(ring, data, n, n)

    @classmethod
    def diagonal(cls, ring, entries):
        n = len(entries)
        data = [[ring.zero] * n for _ in range(n)]
        for i, c in enumerate(entries):
            data[i][i] = ring(c)
        return cls(ring, data, n, n)

    @classmethod
    def block_diagonal(cls, ring, blocks):
        n = sum(b.nrows for b in blocks)
        m = sum(b.ncols for b in blocks)
        out = cls.zeros(ring, n, m)
        r = c = 0
        for b in blocks:
            _check_ring(ring, b.ring)
            for i in range(b.nrows):
                out.data[r + i][c : c + b.ncols] = list(b.data[i])
            r += b.nrows
            c += b.ncols
        return out

    @classmethod
    def hstack(cls, mats):
        ring = mats[0].ring
        n = mats[0].nrows
        for m in mats:
            _check_ring(ring, m.ring)
            if m.nrows != n:
                raise ValueError("row counts differ")
        data = [sum((list(m.data[i]) for m in mats), []) for i in range(n)]
        return cls(ring, data, n, sum(m.ncols for m in mats))

    @classmethod
    def vstack(cls, mats):
        ring = mats[0].ring
        ncols = mats[0].ncols
        data = []
        for m in mats:
            _check_ring(ring, m.ring)
            if m.ncols != ncols:
                raise ValueError("column counts differ")
            data.extend(list(r) for r in m.data)
        return cls(ring, data, len(data), ncols)

    # -- access
    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i):
        return tuple(self.data[i])

    def column(self, j):
        return tuple(r[j] for r in self.data)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def rows(self):
        return [tuple(r) for r in self.data]

    def submatrix(self, rows, cols):
        return Matrix(self.ring, [[self.data[i][j] for j in cols] for i in rows], len(rows), len(cols))

    def map(self, f, ring=None):
        ring = ring or self.ring
        return Matrix(ring, [[f(x) for x in r] for r in self.data], self.nrows, self.ncols)

    def to_lists(self, fmt=str):
        return [[fmt(x) for x in r] for r in self.data]

    # -- arithmetic
    @property
    def T(self):
        data = [list(c) for c in zip(*self.data)] if self.nrows else [[] for _ in range(self.ncols)]
        return Matrix(self.ring, data, self.ncols, self.nrows)

    def __add__(self, other):
        _check_ring(self.ring, other.ring)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(self.ring, [[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)], self.nrows, self.ncols)

    def __sub__(self, other):
        _check_ring(self.ring, other.ring)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(self.ring, [[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)], self.nrows, self.ncols)

    def __neg__(self):
        return Matrix(self.ring, [[-a for a in r] for r in self.data], self.nrows, self.ncols)

    def scale(self, c):
        c = self.ring(c)
        return Matrix(self.ring, [[c * a for a in r] for r in self.data], self.nrows, self.ncols)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            _check_ring(self.ring, other.ring)
            if self.ncols != other.nrows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            zero = self.ring.zero
            cols = other.ncols
            out = []
            odata = other.data
            for r in self.data:
                acc = [zero] * cols
                for k, a in enumerate(r):
                    if a:
                        ok = odata[k]
                        for j in range(cols):
                            b = ok[j]
                            if b:
                                acc[j] = acc[j] + a * b
                out.append(acc)
            return Matrix(self.ring, out, self.nrows, cols)
        return self.apply(other)

    def apply(self, vec):
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        zero = self.ring.zero
        out = []
        for r in self.data:
            acc = zero
            for a, b in zip(r, vec):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def __pow__(self, n):
        if self.nrows != self.ncols:
            raise NotSquare("power of a non-square matrix")
        if n < 0:
            return self.inverse() ** (-n)
        result = Matrix.identity(self.ring, self.nrows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ring == other.ring and self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.shape, tuple(tuple(r) for r in self.data)))

    def is_zero(self):
        return not any(x for r in self.data for x in r)

    def is_square(self):
        return self.nrows == self.ncols

    def __repr__(self):
        return f"Matrix({self.ring!r}, {self.to_lists()})"

    # -- linear algebra over fields
    def _require_field(self):
        if not self.ring.is_field:
            raise KindMismatch(f"{self.ring!r} is not a field")

    def rref(self):
        self._require_field()
        rows, piv = rref_rows(self.data, self.ncols, self.ring.one)
        return Matrix(self.ring, rows, len(rows), self.ncols), piv

    def rank(self):
        self._require_field()
        return len(rref_rows(self.data, self.ncols, self.ring.one)[1])

    def kernel(self) -> "Subspace":
        """{x : A x = 0} as a subspace of ring^ncols."""
        self._require_field()
        rows, piv = rref_rows(self.data, self.ncols, self.ring.one)
        zero, one = self.ring.zero, self.ring.one
        pivset = set(piv)
        vecs = []
        for f in range(self.ncols):
            if f in pivset:
                continue
            v = [zero] * self.ncols
            v[f] = one
            for r, p in zip(rows, piv):
                if r[f]:
                    v[p] = -r[f]
            vecs.append(v)
        return Subspace.span(self.ring, self.ncols, vecs)

    def image(self) -> "Subspace":
        """Column space as a subspace of ring^nrows."""
        self._require_field()
        return Subspace.span(self.ring, self.nrows, self.columns())

    def row_space(self) -> "Subspace":
        self._require_field()
        return Subspace.span(self.ring, self.ncols, self.data)

    def solve(self, b):
        """One solution of A x = b, or None."""
        self._require_field()
        if len(b) != self.nrows:
            raise ValueError("right-hand side length mismatch")
        aug = [list(r) + [self.ring(x)] for r, x in zip(self.data, b)]
        rows, piv = rref_rows(aug, self.ncols + 1, self.ring.one)
        if piv and piv[-1] == self.ncols:
            return None
        x = [self.ring.zero] * self.ncols
        for r, p in zip(rows, piv):
            x[p] = r[self.ncols]
        return tuple(x)

    def solve_matrix(self, B):
        """X with A X = B (columnwise), or None when some column is unsolvable."""
        self._require_field()
        aug = [list(r) + list(s) for r, s in zip(self.data, B.data)]
        rows, piv = rref_rows(aug, self.ncols + B.ncols, self.ring.one)
        if piv and piv[-1] >= self.ncols:
            return None
        X = Matrix.zeros(self.ring, self.ncols, B.ncols)
        for r, p in zip(rows, piv):
            X.data[p] = list(r[self.ncols :])
        return X

    def inverse(self):
        if not self.is_square():
            raise NotSquare("inverse of a non-square matrix")
        self._require_field()
        n = self.nrows
        ident = Matrix.identity(self.ring, n)
        aug = [list(r) + list(s) for r, s in zip(self.data, ident.data)]
        rows, piv = rref_rows(aug, 2 * n, self.ring.one)
        if len(piv) < n or piv[n - 1] != n - 1:
            from ..errors import DivisionByZero

            raise DivisionByZero("matrix is singular")
        return Matrix(self.ring, [r[n:] for r in rows], n, n)

    def is_invertible(self):
        return self.is_square() and self.rank() == self.nrows

    def det(self):
        if not self.is_square():
            raise NotSquare(f"determinant of a {self.shape} matrix")
        if self.ring == ZZu:
            return det_laurent_bareiss(self)
        if not self.ring.is_field:
            return det_bareiss(self)
        return det_gauss(self)

    def trace(self):
        t = self.ring.zero
        for i in range(min(self.nrows, self.ncols)):
            t = t + self.data[i][i]
        return t




def det_gauss(A: Matrix):
    n = A.nrows
    rows = [list(r) for r in A.data]
    one = A.ring.one
    det = one
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c]), None)
        if piv is None:
            return A.ring.zero
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        pr = rows[c]
        lead = pr[c]
        det = det * lead
        inv = one / lead
        for i in range(c + 1, n):
            f = rows[i][c]
            if f:
                f = f * inv
                ri = rows[i]
                for j in range(c, n):
                    if pr[j]:
                        ri[j] = ri[j] - f * pr[j]
    return det


def det_bareiss(A: Matrix):
    """Fraction-free elimination for an integral domain with exact ``/``."""
    n = A.nrows
    if n == 0:
        return A.ring.one
    M = [list(r) for r in A.data]
    sign = 1
    prev = A.ring.one
    for k in range(n - 1):
        if not M[k][k]:
            sw = next((i for i in range(k + 1, n) if M[i][k]), None)
            if sw is None:
                return A.ring.zero
            M[k], M[sw] = M[sw], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev
        prev = M[k][k]
    d = M[n - 1][n - 1]
    return d if sign == 1 else -d


def det_laurent_bareiss(A: Matrix) -> LaurentPoly:
    """Bareiss over Z[u] after clearing negative powers row by row.

    Row i is multiplied by u^k_i so that all entries are ordinary
    polynomials; the determinant picks up u^(sum k_i), divided out at the end.
    """
    n = A.nrows
    if n == 0:
        return LaurentPoly.constant(1)
    shift = 0
    M = []
    for r in A.data:
        vals = [x.valuation() for x in r if x]
        k = max(0, -min(vals)) if vals else 0
        shift += k
        M.append([x.shift(k).dense() if x else [] for x in r])
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not M[k][k]:
            sw = next((i for i in range(k + 1, n) if M[i][k]), None)
            if sw is None:
                return LaurentPoly()
            M[k], M[sw] = M[sw], M[k]
            sign = -sign
        pivot = M[k][k]
        rowk = M[k]
        for i in range(k + 1, n):
            ri = M[i]
            a = ri[k]
            for j in range(k + 1, n):
                num = dense_sub(dense_mul(ri[j], pivot), dense_mul(a, rowk[j]))
                ri[j] = dense_exact_div(num, prev) if num else []
        prev = pivot
    d = LaurentPoly.from_dense(M[n - 1][n - 1], -shift)
    return d if sign == 1 else -d


def det_cofactor(A: Matrix):
    """Leibniz expansion; only for small matrices (test oracle)."""
    n = A.nrows
    total = A.ring.zero
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = A.ring.one
        for i in range(n):
            term = term * A.data[i][perm[i]]
            if not term:
                break
        if term:
            total = total - term if inv % 2 else total + term
    return total


class Subspace:
    """Subspace of ring^n stored by its reduced row echelon basis.

    Equal subspaces have identical (rows, pivots), so equality is a direct
    comparison."""

    __slots__ = ("ring", "ambient", "rows", "pivots")

    def __init__(self, ring, ambient, rows, pivots):
        self.ring = ring
        self.ambient = ambient
        self.rows = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)

    @classmethod
    def span(cls, ring, ambient, vectors):
        vecs = [[ring(x) for x in v] for v in vectors]
        for v in vecs:
            if len(v) != ambient:
                raise AmbientMismatch(f"vector of length {len(v)} in ambient {ambient}")
        rows, piv = rref_rows(vecs, ambient, ring.one)
        return cls(ring, ambient, rows, piv)

    @classmethod
    def zero(cls, ring, ambient):
        return cls(ring, ambient, [], [])

    @classmethod
    def full(cls, ring, ambient):
        return cls(ring, ambient, Matrix.identity(ring, ambient).data, range(ambient))

    @property
    def dim(self):
        return len(self.rows)

    def basis(self):
        return list(self.rows)

    def basis_matrix(self) -> Matrix:
        """Columns are the basis vectors (ambient x dim)."""
        return Matrix.from_columns(self.ring, self.rows, self.ambient)

    def _check(self, other):
        if self.ambient != other.ambient:
            raise AmbientMismatch(f"ambient {self.ambient} vs {other.ambient}")
        _check_ring(self.ring, other.ring)

    def reduce(self, v):
        v = list(v)
        for r, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                v = [a - c * b if b else a for a, b in zip(v, r)]
        return tuple(v)

    def coordinates(self, v):
        """Coefficients of v in the echelon basis, or None if v is outside."""
        if any(self.reduce(v)):
            return None
        return tuple(v[p] for p in self.pivots)

    def __contains__(self, v):
        if len(v) != self.ambient:
            raise AmbientMismatch("vector length differs from ambient dimension")
        return not any(self.reduce([self.ring(x) for x in v]))

    contains = __contains__

    def __add__(self, other):
        self._check(other)
        return Subspace.span(self.ring, self.ambient, list(self.rows) + list(other.rows))

    def annihilator(self):
        """{x : <r, x> = 0 for all basis rows r}."""
        if not self.rows:
            return Subspace.full(self.ring, self.ambient)
        return Matrix(self.ring, [list(r) for r in self.rows], len(self.rows), self.ambient).kernel()

    def __and__(self, other):
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ring, self.ambient)
        if self.dim == self.ambient:
            return other
        if other.dim == self.ambient:
            return self
        return (self.annihilator() + other.annihilator()).annihilator()

    intersect = __and__

    def __le__(self, other):
        self._check(other)
        return all(r in other for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient == other.ambient
            and self.ring == other.ring
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ambient, self.rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"

    def complement_coordinates(self):
        piv = set(self.pivots)
        return [j for j in range(self.ambient) if j not in piv]

    def quotient_matrix(self) -> Matrix:
        """Matrix of ring^n -> ring^n / self in the complement coordinates.

        Reduces v against the echelon rows and keeps the non-pivot entries."""
        ring = self.ring
        free = self.complement_coordinates()
        Q = Matrix.zeros(ring, len(free), self.ambient)
        for a, j in enumerate(free):
            Q.data[a][j] = ring.one
            for r, p in zip(self.rows, self.pivots):
                if r[j]:
                    Q.data[a][p] = -r[j]
        return Q

    def image_under(self, A: Matrix) -> "Subspace":
        return Subspace.span(A.ring, A.nrows, [A.apply(r) for r in self.rows])

    def preimage_under(self, A: Matrix) -> "Subspace":
        """{x : A x in self}."""
        if self.dim == self.ambient:
            return Subspace.full(A.ring, A.ncols)
        return (self.quotient_matrix() @ A).kernel()

    def is_invariant(self, A: Matrix) -> bool:
        return all(A.apply(r) in self for r in self.rows)


# module-level aliases for the operation names used in reports and tests
def kernel(M):
    return M.kernel()


def image(M):
    return M.image()


def rank(M):
    return M.rank()


def solve(M, b):
    return M.solve(b)


def det(M):
    return M.det()


def subspace_sum(A, B):
    return A + B


def subspace_intersect(A, B):
    return A & B


def subspace_eq(A, B):
    A._check(B)
    return A == B


def contains(A, v):
    return v in A


__all__ = [
    "Matrix",
    "Subspace",
    "QQ",
    "rref_rows",
    "det_gauss",
    "det_bareiss",
    "det_laurent_bareiss",
    "det_cofactor",
    "kernel",
    "image",
    "rank",
    "solve",
    "det",
    "subspace_sum",
    "subspace_intersect",
    "subspace_eq",
    "contains",
]
