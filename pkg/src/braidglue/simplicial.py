"""Homology coefficient systems on a simplex and their chain complexes.

A coefficient system on the (n-1)-simplex assigns a vector space B(J) to every
subset J of [1, n] and a map B(K) -> B(J) to every inclusion J in K.  The
chain complex has C_k the sum of B(J) over |J| = k + 1 and the face J - {j_m}
of J = {j_0 < ... < j_k} enters with sign (-1)^m.

>>> cs = build_homlem_instance(["a"], {1: {"a"}}, {1: set()}, {"a": 2})
>>> homology(chain_complex(cs))
[2]
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import IncoherentSystem, InputError
from .exact import QQ, Matrix


def subsets(n, k=None):
    """Subsets of [1, n] as sorted tuples, by size then lexicographically."""
    sizes = range(n + 1) if k is None else [k]
    return [c for s in sizes for c in combinations(range(1, n + 1), s)]


class CoefficientSystem:
    """dims[J] and transitions[(J, K)] : B(K) -> B(J) for J inside K."""

    def __init__(self, n, dims, transitions, ring=QQ):
        self.n = n
        self.ring = ring
        self.dims = {tuple(sorted(J)): int(d) for J, d in dims.items()}
        self.transitions = {(tuple(sorted(J)), tuple(sorted(K))): M for (J, K), M in transitions.items()}
        for J in subsets(n):
            self.dims.setdefault(J, 0)

    def dim(self, J):
        return self.dims[tuple(sorted(J))]

    def transition(self, J, K) -> Matrix:
        J, K = tuple(sorted(J)), tuple(sorted(K))
        if not set(J) <= set(K):
            raise InputError(f"{J} is not contained in {K}")
        M = self.transitions.get((J, K))
        if M is None:
            if J == K:
                return Matrix.identity(self.ring, self.dim(J))
            return Matrix.zeros(self.ring, self.dim(J), self.dim(K))
        return M

    def check_coherent(self):
        for J in subsets(self.n):
            if self.transition(J, J) != Matrix.identity(self.ring, self.dim(J)):
                raise IncoherentSystem(f"transition {J} -> {J} is not the identity")
        for L in subsets(self.n):
            for K in _subsets_of(L):
                for J in _subsets_of(K):
                    lhs = self.transition(J, K) @ self.transition(K, L)
                    if lhs != self.transition(J, L):
                        raise IncoherentSystem(f"transitions {L} -> {K} -> {J} do not compose")
        return True

    @classmethod
    def constant(cls, n, dim=1, ring=QQ):
        dims = {J: dim for J in subsets(n)}
        trans = {(J, K): Matrix.identity(ring, dim) for K in subsets(n) for J in _subsets_of(K)}
        return cls(n, dims, trans, ring)


def _subsets_of(K):
    return [c for s in range(len(K) + 1) for c in combinations(K, s)]


@dataclass
class HomlemInstance:
    """Data of a homlem coefficient system, kept for bookkeeping."""

    n: int
    T: list
    I1: dict
    I2: dict
    dims: dict

    def members(self, J):
        """t in T(J), i.e. I2(t) <= J <= I1(t)."""
        J = set(J)
        return [t for t in self.T if self.I2[t] <= J <= self.I1[t]]

    def hypothesis(self):
        return all(self.I1[t] != self.I2[t] for t in self.T)


def build_homlem_instance(T, T1, T2, dims, n=None, ring=QQ) -> CoefficientSystem:
    """B(J) = sum of B_t over t in the intersection of T1[j] (j in J) and
    T2[j] (j not in J); transitions project then include."""
    T = list(T)
    if n is None:
        keys = set(T1) | set(T2)
        n = max(keys) if keys else 0
    for fam in (T1, T2):
        for j in fam:
            if not 1 <= j <= n:
                raise InputError(f"family index {j} outside [1, {n}]")
    I1 = {t: frozenset(j for j in range(1, n + 1) if t in T1.get(j, ())) for t in T}
    I2 = {t: frozenset(j for j in range(1, n + 1) if t not in T2.get(j, ())) for t in T}
    inst = HomlemInstance(n, T, I1, I2, {t: int(dims.get(t, 1)) for t in T})
    return coefficient_system_from_instance(inst, ring)


def coefficient_system_from_instance(inst: HomlemInstance, ring=QQ) -> CoefficientSystem:
    n = inst.n
    layout = {}
    dims = {}
    for J in subsets(n):
        off = 0
        pos = {}
        for t in inst.members(J):
            pos[t] = off
            off += inst.dims[t]
        layout[J] = pos
        dims[J] = off
    trans = {}
    for K in subsets(n):
        for J in _subsets_of(K):
            M = Matrix.zeros(ring, dims[J], dims[K])
            for t, pk in layout[K].items():
                pj = layout[J].get(t)
                if pj is None:
                    continue
                for a in range(inst.dims[t]):
                    M.data[pj + a][pk + a] = ring.one
            trans[(J, K)] = M
    cs = CoefficientSystem(n, dims, trans, ring)
    cs.instance = inst
    return cs


@dataclass
class ChainComplex:
    """degrees[k] is dim C_k; boundaries[k] : C_k -> C_{k-1}.

    ``lowest`` is the lowest degree present (-1 when B(empty) is attached)."""

    ring: object
    lowest: int
    dims: dict
    boundaries: dict

    def check(self):
        for k, d in self.boundaries.items():
            nxt = self.boundaries.get(k + 1)
            if nxt is not None and not (d @ nxt).is_zero():
                raise IncoherentSystem(f"d_{k} d_{k + 1} != 0")
        return True

    def euler_characteristic(self):
        return sum((-1) ** k * d for k, d in self.dims.items())


def chain_complex(cs: CoefficientSystem, include_empty=False) -> ChainComplex:
    cs.check_coherent()
    ring = cs.ring
    n = cs.n
    lowest = -1 if include_empty else 0
    blocks = {}
    dims = {}
    for k in range(lowest, n):
        Js = subsets(n, k + 1)
        offs = {}
        off = 0
        for J in Js:
            offs[J] = off
            off += cs.dim(J)
        blocks[k] = offs
        dims[k] = off
    bounds = {}
    for k in range(lowest + 1, n):
        D = Matrix.zeros(ring, dims[k - 1], dims[k])
        for J, cj in blocks[k].items():
            for m, j in enumerate(J):
                F = tuple(x for x in J if x != j)
                M = cs.transition(F, J)
                sign = ring.one if m % 2 == 0 else -ring.one
                cf = blocks[k - 1][F]
                for a in range(M.nrows):
                    for b in range(M.ncols):
                        if M.data[a][b]:
                            D.data[cf + a][cj + b] = D.data[cf + a][cj + b] + sign * M.data[a][b]
        bounds[k] = D
    cx = ChainComplex(ring, lowest, dims, bounds)
    cx.check()
    return cx


def homology(cx: ChainComplex):
    """[dim H_lowest, ..., dim H_top] via ranks."""
    ranks = {k: (D.rank() if D.nrows and D.ncols else 0) for k, D in cx.boundaries.items()}
    out = []
    for k in sorted(cx.dims):
        out.append(cx.dims[k] - ranks.get(k, 0) - ranks.get(k + 1, 0))
    return out


def random_homlem_instance(rng: random.Random, max_n=4, max_T=6, max_dim=3, enforce=True) -> HomlemInstance:
    n = rng.randint(1, max_n)
    size = rng.randint(0, max_T)
    T = [f"t{k}" for k in range(size)]
    I1, I2 = {}, {}
    for t in T:
        while True:
            a = frozenset(j for j in range(1, n + 1) if rng.random() < 0.5)
            b = frozenset(j for j in range(1, n + 1) if rng.random() < 0.5)
            if not enforce or a != b:
                break
        I1[t], I2[t] = a, b
    dims = {t: rng.randint(1, max_dim) for t in T}
    return HomlemInstance(n, T, I1, I2, dims)


def homlem_verdict(inst: HomlemInstance, ring=QQ) -> dict:
    cs = coefficient_system_from_instance(inst, ring)
    H = homology(chain_complex(cs))
    b_empty = cs.dim(())
    return {
        "n": inst.n,
        "T": len(inst.T),
        "hypothesis": inst.hypothesis(),
        "homology": H,
        "dim_B_empty": b_empty,
        "holds": H[0] == b_empty and all(h == 0 for h in H[1:]),
    }


def crafted_violation() -> HomlemInstance:
    """t = "a" has I1 = I2 = {1, 2}, so B_a sits alone in degree 1."""
    T = ["a", "b"]
    I1 = {"a": frozenset({1, 2}), "b": frozenset({1, 2})}
    I2 = {"a": frozenset({1, 2}), "b": frozenset()}
    return HomlemInstance(2, T, I1, I2, {"a": 1, "b": 1})


def homlem_fuzz(seed=0, count=200, ring=QQ, **kw) -> dict:
    rng = random.Random(seed)
    results = [homlem_verdict(random_homlem_instance(rng, **kw), ring) for _ in range(count)]
    neg = homlem_verdict(crafted_violation(), ring)
    return {
        "seed": seed,
        "count": count,
        "passed": sum(r["holds"] for r in results),
        "failures": [r for r in results if not r["holds"]],
        "negative_control": neg,
        "ok": all(r["holds"] for r in results) and not neg["holds"],
    }
