"""Grothendieck groups of the glued category and of the sites.

K0(R_i-mod) is Z^{simple R_i-modules}.  The class of a Gamma-module X is the
tuple of classes of its site components e_i X.  The map phi_ij is induced by
M_ij (x)_{R_j} -, and K_ij is spanned by the simple R_i-modules T with
I_ij T = 0, where I_ij is the image of M_ij x M_ji -> R_i.  The subgroup
K(Phi) consists of the (c_i) with phi_ij c_j - c_i in K_ij for all i != j.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import DerivedCorrectionRequired
from ..exact import IntegerLattice, modp
from .algebra import DEFAULT_GAMMA_CAP, GluingAlgebra, Module, assemble
from .datum import GluingDatum
from .functors import balanced_tensor, restrict
from .meataxe import MIN_FIELD, class_vector, radical, simple_modules


def site_simples(G: GluingAlgebra, seed=0, min_field=MIN_FIELD):
    return [simple_modules(G.site_algebra(i), seed=seed, cap=None, min_field=min_field) for i in range(G.n)]


def tensor_with_bimodule(G: GluingAlgebra, i, j, T: Module) -> Module:
    """M_ij (x)_{R_j} T as an R_i-module."""
    M = G.datum.bimodule(i, j)
    return balanced_tensor(M.left, M.right, T, G.site_algebra(i))[0]


def flatness_check(G: GluingAlgebra, seed=0, min_field=MIN_FIELD):
    """Every M_ij (i != j) is projective as a right R_j-module.

    For a finite-dimensional algebra R with radical J this holds iff the
    multiplication M (x)_R J -> M J is injective."""
    sims = site_simples(G, seed, min_field)
    bad = []
    for (i, j), M in sorted(G.datum.bimodules.items()):
        if M.dim == 0:
            continue
        R = G.site_algebra(j)
        J = radical(R, sims[j])
        if J.shape[0] == 0:
            continue
        Jmod = R.regular_module().submodule(J)
        tens = balanced_tensor(M.left, M.right, Jmod, G.site_algebra(i))[0]
        prods = [np.einsum("a,axy->xy", x, M.right) % G.p for x in J]
        MJ = modp.rank(np.hstack(prods), G.p) if prods else 0
        if tens.dim != MJ:
            bad.append((i + 1, j + 1))
    if bad:
        raise DerivedCorrectionRequired(
            f"bimodules {bad} are not projective on the right; their tensor functors are not exact"
        )
    return True


def ideal_image(G: GluingAlgebra, i, j):
    """Echelon basis of I_ij, the image of M_ij x M_ji -> R_i."""
    N = G.datum.nu(i, j, i)
    m = G.datum.algebras[i].dim
    if N.size == 0:
        return np.zeros((0, m), dtype=np.int64)
    return modp.row_basis(N.reshape(-1, m), G.p, m)


@dataclass
class K0Report:
    name: str
    site_simple_counts: list
    simple_classes: list
    phi: dict
    K_ij: dict
    lattice_K: IntegerLattice
    lattice_simples: IntegerLattice
    multiplicities: list
    ressim: list = field(default_factory=list)
    gormac: list = field(default_factory=list)
    braverman: bool = True

    @property
    def equal(self):
        return self.lattice_K == self.lattice_simples

    @property
    def injective(self):
        return self.lattice_simples.rank == len(self.simple_classes)

    @property
    def ok(self):
        return self.equal and self.injective and all(self.ressim) and all(self.gormac) and self.braverman

    def as_dict(self):
        return {
            "datum": self.name,
            "site_simple_counts": self.site_simple_counts,
            "simple_classes": self.simple_classes,
            "simple_multiplicities": self.multiplicities,
            "phi": {f"{i + 1},{j + 1}": m for (i, j), m in sorted(self.phi.items())},
            "K_ij": {f"{i + 1},{j + 1}": v for (i, j), v in sorted(self.K_ij.items())},
            "K(Phi)": [list(b) for b in self.lattice_K.basis],
            "span of simple classes": [list(b) for b in self.lattice_simples.basis],
            "equal": self.equal,
            "classes independent": self.injective,
            "restriction of simples simple or zero": all(self.ressim),
            "middle extension recovers simples": all(self.gormac),
            "j^*j_! recovers M_ij": self.braverman,
            "ok": self.ok,
        }


def k0_verify(datum_or_algebra, seed=0, cap=DEFAULT_GAMMA_CAP, min_field=MIN_FIELD, lemmas=True) -> K0Report:
    from .functors import extend_shriek, middle_extension

    G = datum_or_algebra if isinstance(datum_or_algebra, GluingAlgebra) else assemble(datum_or_algebra, cap)
    flatness_check(G, seed, min_field)
    n = G.n
    sims = site_simples(G, seed, min_field)
    counts = [len(s.modules) for s in sims]
    offs = np.cumsum([0] + counts).tolist()
    total = offs[-1]

    gamma_simples = simple_modules(G, seed=seed, cap=cap, min_field=min_field)
    classes = []
    ressim, gormac = [], []
    for S in gamma_simples.modules:
        vec = []
        for i in range(n):
            comp = restrict(S, i)
            vec += class_vector(comp, sims[i], seed) if comp.dim else [0] * counts[i]
            if lemmas:
                ressim.append(comp.dim == 0 or sum(class_vector(comp, sims[i], seed)) == 1)
        classes.append(vec)
        if lemmas:
            l = next(i for i in range(n) if restrict(S, i).dim)
            gormac.append(middle_extension(restrict(S, l), l, G).is_isomorphic(S))

    phi, Kij = {}, {}
    conditions = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            cols = []
            for T in sims[j].modules:
                X = tensor_with_bimodule(G, i, j, T)
                cols.append(class_vector(X, sims[i], seed) if X.dim else [0] * counts[i])
            mat = [[cols[c][r] for c in range(counts[j])] for r in range(counts[i])]
            phi[(i, j)] = mat
            I = ideal_image(G, i, j)
            inside = [t for t, T in enumerate(sims[i].modules) if all(T.annihilates(x) for x in I)]
            Kij[(i, j)] = inside
            # rows of c -> phi_ij c_j - c_i outside K_ij must vanish
            for r in range(counts[i]):
                if r in inside:
                    continue
                row = [0] * total
                for c in range(counts[j]):
                    row[offs[j] + c] += mat[r][c]
                row[offs[i] + r] -= 1
                conditions.append(row)
    if conditions:
        K = IntegerLattice.zero(len(conditions)).preimage(conditions)
    else:
        K = IntegerLattice.full(total)
    L = IntegerLattice.from_generators(total, classes)

    braverman = True
    if lemmas:
        for j in range(n):
            R = G.site_algebra(j).regular_module()
            X = extend_shriek(R, j, G)
            for i in range(n):
                Mij = G.datum.bimodule(i, j)
                left = Module(G.site_algebra(i), Mij.left) if Mij.dim else None
                comp = restrict(X, i)
                if comp.dim != Mij.dim or (left is not None and not comp.is_isomorphic(left)):
                    braverman = False
    return K0Report(
        G.datum.name or "datum",
        counts,
        classes,
        phi,
        Kij,
        K,
        L,
        gamma_simples.multiplicities,
        ressim,
        gormac,
        braverman,
    )
