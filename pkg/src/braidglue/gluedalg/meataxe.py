"""Splitting modules over F_p and enumerating simple modules.

A random element theta of the action algebra is drawn and its characteristic
polynomial factored over F_p.  For an irreducible factor f, any vector of
ker f(theta) is spun to a submodule; a proper result splits the module.  When
dim ker f(theta) = deg f, Norton's criterion applies: if additionally a vector
of ker f(theta)^T spins to everything under the transposed action, the module
is irreducible; otherwise the annihilator of that dual submodule splits it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor

from ..errors import CapExceeded, FieldTooSmall, MathCheckFailed, SplittingFailed
from ..exact import modp
from .algebra import DEFAULT_GAMMA_CAP, FDAlgebra, GluingAlgebra, Module

MIN_FIELD = 5
MAX_TRIES = 80


def factor_mod_p(coeffs, p):
    """Monic irreducible factors of a polynomial over F_p (highest degree first)."""
    _, facs = gf_factor([ZZ(int(c)) for c in coeffs], p, ZZ)
    out = [([int(c) for c in f], e) for f, e in facs]
    out.sort(key=lambda fe: (len(fe[0]), fe[0]))
    return out


def random_element_action(module: Module, rng):
    c = rng.integers(0, module.p, module.algebra.dim)
    return np.einsum("a,axy->xy", c, module.act) % module.p


def _random_vector(N, rng, p):
    if N.shape[0] == 1:
        return N[0]
    c = rng.integers(0, p, N.shape[0])
    while not c.any():
        c = rng.integers(0, p, N.shape[0])
    return modp.matmul(c[None, :], N, p)[0]


def split(module: Module, rng, tries=MAX_TRIES):
    """None if the module is irreducible, else an echelon basis of a proper
    nonzero submodule."""
    n = module.dim
    p = module.p
    if n <= 1:
        return None
    for _ in range(tries):
        theta = random_element_action(module, rng)
        for f, _e in factor_mod_p(modp.charpoly(theta, p), p):
            deg = len(f) - 1
            ftheta = modp.poly_at_matrix(f, theta, p)
            N = modp.nullspace(ftheta, p)
            if N.shape[0] == 0:
                continue
            U = module.spin(_random_vector(N, rng, p))
            if U.shape[0] < n:
                return U
            if N.shape[0] == deg:
                Nt = modp.nullspace(ftheta.T, p)
                W = module.spin(_random_vector(Nt, rng, p), transpose=True)
                if W.shape[0] < n:
                    return modp.nullspace(W, p)
                return None
    raise SplittingFailed(f"no decisive random element after {tries} tries (dim {n}, p = {p})")


def composition_factors(module: Module, rng, tries=MAX_TRIES):
    """Composition factors (as modules), in order of discovery."""
    out = []
    stack = [module]
    while stack:
        M = stack.pop()
        if M.dim == 0:
            continue
        U = split(M, rng, tries)
        if U is None:
            out.append(M)
            continue
        stack.append(M.quotient(U))
        stack.append(M.submodule(U))
    return out


def same_simple(S: Module, T: Module):
    """Isomorphism of simple modules: equal dimension and Hom(S, T) != 0."""
    return S.dim == T.dim and S.hom_dim(T) > 0


@dataclass
class SimpleList:
    modules: list
    multiplicities: list
    algebra_dim: int

    @property
    def accounted(self):
        return sum(S.dim * m for S, m in zip(self.modules, self.multiplicities))

    @property
    def certified(self):
        return self.accounted == self.algebra_dim

    def index_of(self, M):
        for k, S in enumerate(self.modules):
            if same_simple(S, M):
                return k
        return None


def _check_field(p, min_field):
    if p < min_field:
        raise FieldTooSmall(
            f"random splitting needs at least {min_field} field elements, got p = {p}; "
            "pass a larger prime or lower the bound"
        )


def _regular_summands(alg: FDAlgebra):
    """Direct summands of the regular module: Gamma e_k for a gluing algebra."""
    R = alg.regular_module()
    if isinstance(alg, GluingAlgebra):
        out = []
        for k in range(alg.n):
            cols = alg.column_indices(k)
            if not cols:
                continue
            B = np.zeros((len(cols), alg.dim), dtype=np.int64)
            for r, c in enumerate(cols):
                B[r, c] = 1
            out.append(R.submodule(B))
        return out
    return [R]


def simple_modules(alg: FDAlgebra, seed=0, cap=DEFAULT_GAMMA_CAP, min_field=MIN_FIELD, tries=MAX_TRIES) -> SimpleList:
    """All simple modules up to isomorphism, from the composition factors of
    the regular module; multiplicities are composition multiplicities."""
    _check_field(alg.p, min_field)
    if cap is not None and alg.dim > cap:
        raise CapExceeded(f"algebra dimension {alg.dim} exceeds the cap {cap}")
    key = (seed, tries)
    cache = getattr(alg, "_simples", {})
    if key in cache:
        return cache[key]
    rng = np.random.default_rng(seed)
    simples, mult = [], []
    for P in _regular_summands(alg):
        for F in composition_factors(P, rng, tries):
            for k, S in enumerate(simples):
                if same_simple(S, F):
                    mult[k] += 1
                    break
            else:
                simples.append(F)
                mult.append(1)
    order = sorted(range(len(simples)), key=lambda k: _simple_sort_key(alg, simples[k]))
    out = SimpleList([simples[k] for k in order], [mult[k] for k in order], alg.dim)
    if not out.certified:
        raise MathCheckFailed(f"composition factors account for {out.accounted} of {alg.dim} dimensions")
    cache[key] = out
    alg._simples = cache
    return out


def _simple_sort_key(alg, S):
    if isinstance(alg, GluingAlgebra):
        dims = tuple(-modp.rank(alg.element_action(S, alg.idempotent(i)), alg.p) for i in range(alg.n))
        return (dims, S.dim)
    return (S.dim,)


def class_vector(module: Module, simples: SimpleList, seed=0, tries=MAX_TRIES):
    """Composition multiplicities of the module against a list of simples."""
    rng = np.random.default_rng(seed)
    vec = [0] * len(simples.modules)
    for F in composition_factors(module, rng, tries):
        k = simples.index_of(F)
        if k is None:
            raise MathCheckFailed("composition factor matches no listed simple module")
        vec[k] += 1
    return vec


def radical(alg: FDAlgebra, simples: SimpleList):
    """Echelon basis of rad A, the common annihilator of the simple modules."""
    p = alg.p
    rows = [S.act.reshape(alg.dim, -1).T for S in simples.modules if S.dim]
    if not rows:
        return np.eye(alg.dim, dtype=np.int64)
    return modp.nullspace(np.vstack(rows), p)
