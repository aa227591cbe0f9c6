"""Finite-dimensional algebras over F_p, their modules, and the gluing algebra.

An algebra is a structure tensor C with e_a e_b = sum_c C[a,b,c] e_c and a
unit vector.  A module is a stack of action matrices act[a] (acting on column
vectors) for the basis elements.  Subspaces are stored as reduced echelon row
bases, so the coordinates of a vector of a subspace are its pivot entries.
"""

from __future__ import annotations

import numpy as np

from ..errors import CapExceeded, InputError, MathCheckFailed
from ..exact import modp
from .datum import GluingDatum

DEFAULT_GAMMA_CAP = 64


class FDAlgebra:
    def __init__(self, mult, unit, p, name=""):
        self.p = int(p)
        self.mult = np.asarray(mult, dtype=np.int64) % self.p
        self.unit = np.asarray(unit, dtype=np.int64) % self.p
        self.name = name
        self._gens = None
        self._regular = None

    @property
    def dim(self):
        return self.mult.shape[0]

    def product(self, x, y):
        return np.einsum("a,b,abc->c", x, y, self.mult) % self.p

    def left_mult(self, x):
        """Matrix of y -> x y."""
        return np.einsum("a,abc->cb", x, self.mult) % self.p

    def right_mult(self, x):
        """Matrix of y -> y x."""
        return np.einsum("b,abc->ca", x, self.mult) % self.p

    def basis_vector(self, a):
        v = np.zeros(self.dim, dtype=np.int64)
        v[a] = 1
        return v

    def is_associative(self):
        """(e_a e_b) e_c = e_a (e_b e_c) on all basis triples."""
        p, D = self.p, self.dim
        flat = self.mult.reshape(D, D * D)
        for a in range(D):
            lhs = modp.matmul(self.mult[a], flat, p).reshape(D, D, D)
            rhs = modp.matmul(self.mult.reshape(D * D, D), self.mult[a], p).reshape(D, D, D)
            if not np.array_equal(lhs, rhs):
                return False
        return True

    def subalgebra_basis(self, gens):
        """Echelon basis of the subalgebra generated by the given basis indices."""
        p = self.p
        V = modp.row_basis(np.vstack([self.unit] + [self.basis_vector(g) for g in gens]), p)
        while True:
            new = [V] + [modp.matmul(V, self.mult[g], p) for g in gens]
            W = modp.row_basis(np.vstack(new), p)
            if W.shape[0] == V.shape[0]:
                return W
            V = W

    def generators(self):
        """A small set of basis indices generating the algebra (greedy)."""
        if self._gens is None:
            gens = []
            V = self.subalgebra_basis(gens)
            for b in range(self.dim):
                if V.shape[0] == self.dim:
                    break
                if modp.rank(np.vstack([V, self.basis_vector(b)]), self.p) > V.shape[0]:
                    gens.append(b)
                    V = self.subalgebra_basis(gens)
            self._gens = gens
        return self._gens

    def regular_module(self) -> "Module":
        if self._regular is None:
            self._regular = Module(self, self.mult.transpose(0, 2, 1))
        return self._regular

    def element_action(self, module, x):
        return np.einsum("a,axy->xy", x, module.act) % self.p


class Module:
    """Left module given by act[a] for every basis element a."""

    def __init__(self, algebra: FDAlgebra, act):
        self.algebra = algebra
        self.p = algebra.p
        act = np.asarray(act, dtype=np.int64) % self.p
        if act.ndim != 3 or act.shape[0] != algebra.dim or act.shape[1] != act.shape[2]:
            raise InputError("module actions must have shape (dim algebra, n, n)")
        self.act = act

    @property
    def dim(self):
        return self.act.shape[1]

    def gen_actions(self):
        return [self.act[g] for g in self.algebra.generators()]

    def check_axioms(self):
        """act(g b) = act(g) act(b) for generators g and all b, and 1 acts as I."""
        p = self.p
        A = self.algebra
        one = np.einsum("a,axy->xy", A.unit, self.act) % p
        if not np.array_equal(one, np.eye(self.dim, dtype=np.int64)):
            return False
        for g in A.generators():
            lhs = np.einsum("bc,cxy->bxy", A.mult[g], self.act) % p
            rhs = np.einsum("xz,bzy->bxy", self.act[g], self.act) % p
            if not np.array_equal(lhs, rhs):
                return False
        return True

    # -- subspaces ------------------------------------------------------------

    def spin(self, vectors, transpose=False):
        """Echelon basis of the smallest submodule containing the vectors.

        With transpose=True the transposed action is used (dual module)."""
        p = self.p
        gens = [g.T if transpose else g for g in self.gen_actions()]
        V = modp.row_basis(np.atleast_2d(np.asarray(vectors, dtype=np.int64)), p, self.dim)
        frontier = V
        while frontier.shape[0]:
            imgs = np.vstack([modp.matmul(frontier, g.T, p) for g in gens])
            W = modp.row_basis(np.vstack([V, imgs]), p)
            if W.shape[0] == V.shape[0]:
                break
            frontier = imgs
            V = W
        return V

    def is_invariant(self, B):
        B = np.asarray(B, dtype=np.int64)
        if B.shape[0] == 0:
            return True
        r = B.shape[0]
        for g in self.gen_actions():
            if modp.rank(np.vstack([B, modp.matmul(B, g.T, self.p)]), self.p) > r:
                return False
        return True

    def submodule(self, B) -> "Module":
        """Module structure on the invariant subspace with echelon basis B."""
        B, piv = modp.rref(B, self.p)
        X = np.stack([modp.matmul(a, B.T, self.p)[piv] for a in self.act]) if len(piv) else np.zeros(
            (self.algebra.dim, 0, 0), dtype=np.int64
        )
        return Module(self.algebra, X)

    def quotient(self, B) -> "Module":
        """Module structure on V / span(B) with the non-pivot coordinates."""
        p = self.p
        B, piv = modp.rref(B, p) if np.asarray(B).size else (np.zeros((0, self.dim), dtype=np.int64), [])
        Q = [j for j in range(self.dim) if j not in set(piv)]
        if not piv:
            return Module(self.algebra, self.act)
        X = self.act[:, :, Q][:, Q, :]
        corr = np.einsum("rq,arc->aqc", B[:, Q], self.act[:, piv, :][:, :, Q])
        return Module(self.algebra, (X - corr) % p)

    def quotient_coordinates(self, B, v):
        """Coordinates in self.quotient(B) of the vectors (rows) v."""
        p = self.p
        B, piv = modp.rref(B, p) if np.asarray(B).size else (np.zeros((0, self.dim), dtype=np.int64), [])
        v = np.atleast_2d(np.asarray(v, dtype=np.int64)) % p
        if piv:
            v = (v - modp.matmul(v[:, piv], B, p)) % p
        Q = [j for j in range(self.dim) if j not in set(piv)]
        return v[:, Q]

    def direct_sum(self, other) -> "Module":
        n, m = self.dim, other.dim
        X = np.zeros((self.algebra.dim, n + m, n + m), dtype=np.int64)
        X[:, :n, :n] = self.act
        X[:, n:, n:] = other.act
        return Module(self.algebra, X)

    def annihilates(self, x):
        return not (self.algebra.element_action(self, x)).any()

    # -- homomorphisms --------------------------------------------------------

    def hom(self, other) -> list:
        """Basis of Hom(self, other) as (other.dim x self.dim) matrices."""
        p = self.p
        n, m = other.dim, self.dim
        if n == 0 or m == 0:
            return []
        rows = []
        for g in self.algebra.generators():
            S, T = self.act[g], other.act[g]
            rows.append(np.kron(T, np.eye(m, dtype=np.int64)) - np.kron(np.eye(n, dtype=np.int64), S.T))
        if not rows:
            N = np.eye(n * m, dtype=np.int64)
        else:
            N = modp.nullspace(np.vstack(rows) % p, p)
        return [v.reshape(n, m) for v in N]

    def hom_dim(self, other):
        return len(self.hom(other))

    def is_isomorphic(self, other, rng=None, tries=24):
        """Exact when an isomorphism is found; otherwise a random search over
        Hom(self, other) found no invertible element."""
        if self.dim != other.dim:
            return False
        if self.dim == 0:
            return True
        H = self.hom(other)
        if not H:
            return False
        rng = rng or np.random.default_rng(0)
        for t in range(tries):
            if t == 0 and len(H) == 1:
                F = H[0]
            else:
                c = rng.integers(0, self.p, len(H))
                F = sum(int(ci) * h for ci, h in zip(c, H)) % self.p
            if modp.rank(F, self.p) == self.dim:
                return True
        return False

    def kernel_of(self, F):
        """Echelon basis of ker F for a module map F : self -> other."""
        return modp.nullspace(F, self.p)

    def image_of(self, F):
        """Echelon basis of im F inside the target."""
        F = np.asarray(F, dtype=np.int64)
        return modp.row_basis(F.T, self.p, F.shape[0])


class GluingAlgebra(FDAlgebra):
    """Gamma = sum over (i, j) of M_ij with product given by nu."""

    def __init__(self, datum: GluingDatum):
        self.datum = datum
        n = datum.n
        self.blocks = []
        self.offsets = {}
        off = 0
        for i in range(n):
            for j in range(n):
                d = datum.mdim(i, j)
                self.offsets[(i, j)] = off
                self.blocks.append((i, j))
                off += d
        D = off
        C = np.zeros((D, D, D), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if datum.mdim(i, j) and datum.mdim(j, k) and datum.mdim(i, k):
                        C[self.block(i, j), self.block(j, k), self.block(i, k)] = datum.nu(i, j, k)
        unit = np.zeros(D, dtype=np.int64)
        for i in range(n):
            unit[self.block(i, i)] = datum.algebras[i].unit
        super().__init__(C, unit, datum.p, datum.name)
        self.n = n
        self._sites = {}

    def block(self, i, j):
        o = self.offsets[(i, j)]
        return slice(o, o + self.datum.mdim(i, j))

    def block_indices(self, i, j):
        o = self.offsets[(i, j)]
        return list(range(o, o + self.datum.mdim(i, j)))

    def column_indices(self, k):
        """Basis indices of Gamma e_k."""
        return [x for i in range(self.n) for x in self.block_indices(i, k)]

    def row_indices(self, k):
        """Basis indices of e_k Gamma."""
        return [x for j in range(self.n) for x in self.block_indices(k, j)]

    def idempotent(self, i):
        e = np.zeros(self.dim, dtype=np.int64)
        e[self.block(i, i)] = self.datum.algebras[i].unit
        return e

    def site_algebra(self, i) -> FDAlgebra:
        if i not in self._sites:
            A = self.datum.algebras[i]
            self._sites[i] = FDAlgebra(A.mult, A.unit, self.p, A.name or f"R_{self.datum.site_label(i)}")
        return self._sites[i]

    def check_block_structure(self):
        """1 = sum e_i and e_i x e_j is x on block (i, j) and 0 elsewhere."""
        p = self.p
        if not np.array_equal(sum(self.idempotent(i) for i in range(self.n)) % p, self.unit):
            return False
        for i in range(self.n):
            Li = self.left_mult(self.idempotent(i))
            for j in range(self.n):
                Rj = self.right_mult(self.idempotent(j))
                P = modp.matmul(Li, Rj, p)
                expect = np.zeros((self.dim, self.dim), dtype=np.int64)
                idx = self.block_indices(i, j)
                expect[idx, idx] = 1
                if not np.array_equal(P, expect):
                    return False
        return True

    def blocks_of(self, x):
        for (i, j), o in self.offsets.items():
            if o <= x < o + self.datum.mdim(i, j):
                return (i, j)
        raise IndexError(x)


FULL_ASSOCIATIVITY_LIMIT = 48


def assemble(datum: GluingDatum, cap=None) -> GluingAlgebra:
    """Validate the datum and build the gluing algebra."""
    datum.validate()
    D = sum(datum.mdim(i, j) for i in range(datum.n) for j in range(datum.n))
    if cap is not None and D > cap:
        raise CapExceeded(f"dim Gamma = {D} exceeds the cap {cap}")
    G = GluingAlgebra(datum)
    # the quadruple check in validate() is equivalent; the full triple check
    # is an independent cross-check on small algebras
    if D <= FULL_ASSOCIATIVITY_LIMIT and not G.is_associative():
        raise MathCheckFailed("assembled algebra is not associative")
    return G
