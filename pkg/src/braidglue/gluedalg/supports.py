"""Supports of simple modules over a W-gluing algebra.

Sites are the elements of W.  The support of a module X is {w : e_w X != 0}.
Each support is compared with the candidate shapes: W itself, or an
intersection of right translates P_i x of the half-sets
P_i = {w : l(w s_i) > l(w)}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from ..errors import InputError, MathCheckFailed
from ..exact import modp
from .algebra import GluingAlgebra, assemble
from .datum import GluingDatum
from .functors import balanced_tensor, site_dims
from .meataxe import MIN_FIELD, simple_modules

SUPPORT_GAMMA_CAP = 128


def translated_half_sets(system):
    """All sets P_i x as frozensets of element indices, without repeats."""
    out = set()
    for i in range(1, system.rank + 1):
        P = [w.index for w in system.half_set(i)]
        for x in system.elements:
            out.add(frozenset((system.elements[w] * x).index for w in P))
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def half_set_hull(system, support, halves=None):
    """Intersection of all P_i x containing the given set of indices."""
    halves = halves if halves is not None else translated_half_sets(system)
    hull = frozenset(range(system.order))
    for H in halves:
        if support <= H:
            hull &= H
    return hull


def w_gluing_check(datum: GluingDatum):
    """nu_{x,y,z} induces an isomorphism M_xy (x)_{R_y} M_yz -> M_xz whenever
    l(x z^-1) = l(x y^-1) + l(y z^-1)."""
    system = datum.system
    if system is None:
        raise InputError("W-gluing check needs a datum indexed by a Coxeter system")
    p = datum.p
    els = system.elements
    from .algebra import FDAlgebra, Module

    failures = []
    for x, y, z in product(range(system.order), repeat=3):
        g, h = els[x] * els[y].inverse(), els[y] * els[z].inverse()
        if (g * h).length != g.length + h.length:
            continue
        Mxy, Myz, Mxz = datum.bimodule(x, y), datum.bimodule(y, z), datum.bimodule(x, z)
        Ry = FDAlgebra(datum.algebras[y].mult, datum.algebras[y].unit, p)
        Rx = FDAlgebra(datum.algebras[x].mult, datum.algebras[x].unit, p)
        right = Module(Ry, Myz.left)  # M_yz as a left R_y-module
        tens, rel = balanced_tensor(Mxy.left, Mxy.right, right, Rx)
        N = datum.nu(x, y, z).reshape(Mxy.dim * Myz.dim, Mxz.dim).T % p  # ambient -> M_xz
        if rel.shape[0]:
            if modp.matmul(N, rel.T, p).any():
                failures.append((x, y, z))
                continue
            piv = modp.rref(rel, p)[1]
            Q = [c for c in range(N.shape[1]) if c not in set(piv)]
            N = N[:, Q]
        if N.shape[0] != N.shape[1] or modp.rank(N, p) != N.shape[0]:
            failures.append((x, y, z))
    return failures


@dataclass
class SupportEntry:
    simple: int
    dim: int
    support: list
    full: bool
    hull: list
    is_half_set_intersection: bool
    convex: bool

    @property
    def ok(self):
        return self.full or (self.is_half_set_intersection and self.convex)


@dataclass
class SupportReport:
    system: str
    gamma_dim: int
    entries: list
    w_gluing_ok: bool

    @property
    def ok(self):
        return self.w_gluing_ok and all(e.ok for e in self.entries)

    def as_dict(self):
        return {
            "system": self.system,
            "dim Gamma": self.gamma_dim,
            "W-gluing condition": self.w_gluing_ok,
            "simples": [
                {
                    "dim": e.dim,
                    "support": e.support,
                    "support is W": e.full,
                    "intersection of P_i x": e.is_half_set_intersection,
                    "convex": e.convex,
                }
                for e in self.entries
            ],
            "ok": self.ok,
        }


def support_scan(datum: GluingDatum, seed=0, cap=SUPPORT_GAMMA_CAP, min_field=MIN_FIELD) -> SupportReport:
    system = datum.system
    if system is None:
        raise InputError("support scan needs a W-gluing datum")
    G = datum if isinstance(datum, GluingAlgebra) else assemble(datum, cap)
    fails = w_gluing_check(G.datum)
    halves = translated_half_sets(system)
    simples = simple_modules(G, seed=seed, cap=cap, min_field=min_field)
    entries = []
    els = system.elements
    for k, S in enumerate(simples.modules):
        supp = frozenset(i for i, d in enumerate(site_dims(S)) if d)
        if not supp:
            raise MathCheckFailed("a simple module has empty support")
        full = len(supp) == system.order
        hull = half_set_hull(system, supp, halves)
        convex = system.is_convex([els[i] for i in supp])
        entries.append(
            SupportEntry(
                k,
                S.dim,
                [str(els[i]) for i in sorted(supp)],
                full,
                [str(els[i]) for i in sorted(hull)],
                hull == supp,
                convex,
            )
        )
    return SupportReport(system.label or "custom", G.dim, entries, not fails)
