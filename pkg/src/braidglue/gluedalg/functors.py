"""Restriction to a site and its adjoints on modules over a gluing algebra.

For a site k and an R_k-module A:

* restrict(X, k) is e_k X with its R_k-action;
* extend_shriek(A, k) is Gamma e_k (x)_{R_k} A (left adjoint of restriction);
* extend_star(A, k) is Hom_{R_k}(e_k Gamma, A) with (g f)(y) = f(y g)
  (right adjoint of restriction);
* middle_extension(A, k) is the image of the canonical map
  g (x) a -> (y -> (y g) a) from the first to the second.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import InputError
from ..exact import modp
from .algebra import FDAlgebra, GluingAlgebra, Module


def _eye(n):
    return np.eye(n, dtype=np.int64)


def image_basis(module: Module, x):
    """Echelon basis of x . module (column space of the action of x)."""
    X = module.algebra.element_action(module, x)
    return modp.row_basis(X.T, module.p, module.dim)


def restrict(module: Module, k) -> Module:
    """e_k X as a module over the site algebra R_k."""
    G: GluingAlgebra = module.algebra
    R = G.site_algebra(k)
    B, piv = modp.rref(image_basis(module, G.idempotent(k)), G.p) if module.dim else (np.zeros((0, 0)), [])
    idx = G.block_indices(k, k)
    if not piv:
        return Module(R, np.zeros((R.dim, 0, 0), dtype=np.int64))
    X = np.stack([modp.matmul(module.act[a], B.T, G.p)[piv] for a in idx])
    return Module(R, X)


def site_dims(module: Module):
    G = module.algebra
    return [modp.rank(G.element_action(module, G.idempotent(i)), G.p) for i in range(G.n)]


def support(module: Module):
    """Sites i with e_i X != 0."""
    return [i for i, d in enumerate(site_dims(module)) if d]


def balanced_tensor(left_actions, right_actions, A: Module, algebra):
    """M (x)_R A for an (S, R)-bimodule M and a left R-module A.

    ``left_actions`` are the matrices of the S-basis on M, ``right_actions``
    those of the R-basis (v -> v . r).  Returns (module over S, relation basis)
    where the module lives on the non-pivot coordinates of M (x) A."""
    p = A.p
    d = A.dim
    m = right_actions.shape[1] if right_actions.ndim == 3 else 0
    amb = m * d
    if amb == 0:
        return Module(algebra, np.zeros((algebra.dim, 0, 0), dtype=np.int64)), np.zeros((0, 0), dtype=np.int64)
    rel = [(np.kron(Rr, _eye(d)) - np.kron(_eye(m), Ar)) % p for Rr, Ar in zip(right_actions, A.act)]
    Rel = modp.row_basis(np.hstack(rel).T, p, amb) if rel else np.zeros((0, amb), dtype=np.int64)
    ambient = Module(algebra, np.stack([np.kron(L, _eye(d)) for L in left_actions]))
    return ambient.quotient(Rel) if Rel.shape[0] else ambient, Rel


@dataclass
class ShriekData:
    module: Module
    relations: np.ndarray
    columns: list


def _shriek(A: Module, k, G: GluingAlgebra) -> ShriekData:
    cols = G.column_indices(k)
    reg = G.mult
    # left Gamma-action on Gamma e_k and right R_k-action on it
    left = np.stack([reg[g][cols][:, cols].T for g in range(G.dim)])
    right = np.stack([reg[:, r, :][cols][:, cols].T for r in G.block_indices(k, k)])
    M, Rel = balanced_tensor(left, right, A, G)
    return ShriekData(M, Rel, cols)


def extend_shriek(A: Module, k, G: GluingAlgebra) -> Module:
    _check_site_module(A, k, G)
    return _shriek(A, k, G).module


@dataclass
class StarData:
    module: Module
    basis: np.ndarray  # echelon rows inside Hom_k(e_k Gamma, A), row-major (d x |rows|)
    pivots: list
    rows: list


def _star(A: Module, k, G: GluingAlgebra) -> StarData:
    p = G.p
    rows = G.row_indices(k)
    r = len(rows)
    d = A.dim
    reg = G.mult
    conds = []
    for a, g in enumerate(G.block_indices(k, k)):
        L = reg[g][rows][:, rows].T  # y -> g y on e_k Gamma
        conds.append(np.kron(A.act[a], _eye(r)) - np.kron(_eye(d), L.T))
    H = modp.nullspace(np.vstack(conds) % p, p) if conds and r * d else np.zeros((0, r * d), dtype=np.int64)
    if H.shape[0] == 0:
        return StarData(Module(G, np.zeros((G.dim, 0, 0), dtype=np.int64)), H, [], rows)
    # (g f)(y) = f(y g): F -> F Rg with Rg the matrix of y -> y g
    amb = np.stack([np.kron(_eye(d), reg[:, g, :][rows][:, rows]) for g in range(G.dim)])
    ambient = Module(G, amb)
    H, piv = modp.rref(H, p)
    return StarData(ambient.submodule(H), H, piv, rows)


def extend_star(A: Module, k, G: GluingAlgebra) -> Module:
    _check_site_module(A, k, G)
    return _star(A, k, G).module


def canonical_map(A: Module, k, G: GluingAlgebra):
    """Matrix of j_!A -> j_*A in the coordinates of both modules, with the
    two modules."""
    p = G.p
    sh = _shriek(A, k, G)
    st = _star(A, k, G)
    d = A.dim
    cols, rows = sh.columns, st.rows
    kk = G.block_indices(k, k)
    # P[u, v, a]: coefficient of e_a (site algebra basis) in y_u g_v
    P = G.mult[np.ix_(rows, cols, kk)]
    # ambient map (v, t) -> F with F[s, u] = sum_a P[u, v, a] A_a[s, t]
    amb = np.einsum("uva,ast->suvt", P, A.act).reshape(d * len(rows), len(cols) * d) % p
    # section of the quotient: quotient coordinate q is ambient basis vector Q[q]
    Rel = sh.relations
    piv = modp.rref(Rel, p)[1] if Rel.shape[0] else []
    Q = [j for j in range(len(cols) * d) if j not in set(piv)]
    F = amb[:, Q]
    if st.basis.shape[0] == 0:
        return np.zeros((0, len(Q)), dtype=np.int64), sh.module, st.module
    return F[st.pivots] % p, sh.module, st.module


def middle_extension(A: Module, k, G: GluingAlgebra) -> Module:
    _check_site_module(A, k, G)
    F, _, star = canonical_map(A, k, G)
    if F.size == 0:
        return Module(G, np.zeros((G.dim, 0, 0), dtype=np.int64))
    im = modp.row_basis(F.T, G.p, star.dim)
    if im.shape[0] == 0:
        return Module(G, np.zeros((G.dim, 0, 0), dtype=np.int64))
    return star.submodule(im)


def shriek_unit_check(A: Module, k, G: GluingAlgebra):
    """a -> [e_k (x) a] is an isomorphism A -> e_k j_!A."""
    p = G.p
    sh = _shriek(A, k, G)
    d = A.dim
    cols = sh.columns
    ek = np.zeros(len(cols), dtype=np.int64)
    for t, c in enumerate(cols):
        ek[t] = G.idempotent(k)[c]
    vecs = np.stack([np.kron(ek, _eye(d)[t]) for t in range(d)]) if d else np.zeros((0, 0), dtype=np.int64)
    Rel = sh.relations
    if d == 0:
        return True
    amb = Module(G, np.zeros((G.dim, len(cols) * d, len(cols) * d), dtype=np.int64))
    coords = amb.quotient_coordinates(Rel, vecs) if Rel.shape[0] else vecs
    rk = modp.rank(coords, p)
    return rk == d and restrict(sh.module, k).dim == d


@dataclass
class AdjunctionReport:
    site: int
    hom_shriek: int
    hom_restrict_left: int
    hom_star: int
    hom_restrict_right: int
    unit_iso: bool

    @property
    def ok(self):
        return self.hom_shriek == self.hom_restrict_left and self.hom_star == self.hom_restrict_right and self.unit_iso

    def as_dict(self):
        return {
            "site": self.site + 1,
            "dim Hom(j_!A, B)": self.hom_shriek,
            "dim Hom(A, j^*B)": self.hom_restrict_left,
            "dim Hom(B, j_*A)": self.hom_star,
            "dim Hom(j^*B, A)": self.hom_restrict_right,
            "j^*j_! = id": self.unit_iso,
            "ok": self.ok,
        }


def adjunction_check(A: Module, B: Module, k, G: GluingAlgebra) -> AdjunctionReport:
    """Compare Hom dimensions on both sides of the two adjunctions."""
    _check_site_module(A, k, G)
    resB = restrict(B, k)
    return AdjunctionReport(
        k,
        extend_shriek(A, k, G).hom_dim(B),
        A.hom_dim(resB),
        B.hom_dim(extend_star(A, k, G)),
        resB.hom_dim(A),
        shriek_unit_check(A, k, G),
    )


def _check_site_module(A: Module, k, G: GluingAlgebra):
    if not isinstance(G, GluingAlgebra):
        raise InputError("functors need an assembled gluing algebra")
    if not 0 <= k < G.n:
        raise InputError(f"site {k + 1} outside 1..{G.n}")
    if A.algebra.dim != G.datum.algebras[k].dim:
        raise InputError(f"module is not over the algebra of site {k + 1}")


def kernel_module(F, source: Module, target: Module):
    """Kernel of a module map as a submodule of the source."""
    K = modp.nullspace(F, source.p)
    return source.submodule(K) if K.shape[0] else Module(source.algebra, np.zeros((source.algebra.dim, 0, 0), dtype=np.int64))


def cokernel_module(F, source: Module, target: Module):
    """Cokernel of a module map as a quotient of the target."""
    im = modp.row_basis(np.asarray(F).T, target.p, target.dim)
    return target.quotient(im) if im.shape[0] else target


def is_module_map(F, source: Module, target: Module):
    p = source.p
    for g in source.algebra.generators():
        if not np.array_equal(modp.matmul(target.act[g], F, p), modp.matmul(F, source.act[g], p)):
            return False
    return True


def site_module(algebra: FDAlgebra, act) -> Module:
    return Module(algebra, act)
