"""The length matrix M_{w,w'} = (-u)^l(w' w^-1) of a finite Coxeter group.

Its determinant is a specialization of the group determinant, so it is
divisible by the factors attached to the trivial and sign characters,
sum u^l(w) and sum (-u)^l(w).  For S_3 the determinant vanishes at a
primitive sixth root of unity while (1 - u^2)(1 - u^3) does not, so no matrix
E over Z[u, u^-1] satisfies M E = (1 - u^2)(1 - u^3) I.

>>> from braidglue.coxeter import CoxeterSystem
>>> r = divisibility_analysis(CoxeterSystem.from_label("A2"))
>>> r.verdict, str(r.det_mod_phi6), str(r.p_mod_phi6)
('unsolvable', '0', '4-2u')
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import CoxeterSystem
from .errors import CapExceeded, InputError, SizeMismatch
from .exact import QQu, ZZu, LaurentPoly, Matrix, poly_divrem, reduce_mod

DET_CAP = 48
PHI6 = LaurentPoly.parse("u^2 - u + 1")

# Poincare polynomials prod (1 - u^{e_i}) for groups whose Weyl group is a
# supported Coxeter type
POINCARE_TABLE = {
    "A1": LaurentPoly.parse("1 - u^2"),
    "A2": LaurentPoly.parse("1 - u^2") * LaurentPoly.parse("1 - u^3"),
}
GROUP_NAMES = {"A1": "SL2", "A2": "SL3"}


def build_M(system: CoxeterSystem) -> Matrix:
    u = LaurentPoly.u()
    powers = [(-u) ** k for k in range(max(system._len) + 1)]
    els = system.elements
    rows = [[powers[(b * a.inverse()).length] for b in els] for a in els]
    return Matrix(ZZu, rows, len(els), len(els))


def poincare(system: CoxeterSystem, signed=False) -> LaurentPoly:
    counts = system.length_distribution()
    sign = -1 if signed else 1
    return LaurentPoly({k: c * sign**k for k, c in enumerate(counts) if c})


@dataclass
class AppendixReport:
    label: str
    order: int
    poincare: LaurentPoly
    signed_poincare: LaurentPoly
    det_M: LaurentPoly
    divisible_by_poincare: bool
    divisible_by_signed: bool
    cofactor: LaurentPoly | None
    p_G: LaurentPoly | None = None
    group: str | None = None
    det_mod_phi6: LaurentPoly | None = None
    p_mod_phi6: LaurentPoly | None = None
    verdict: str = "no verdict"

    def as_dict(self):
        out = {
            "system": self.label,
            "order": self.order,
            "poincare": str(self.poincare),
            "signed_poincare": str(self.signed_poincare),
            "det_M": str(self.det_M),
            "divisible_by_poincare": self.divisible_by_poincare,
            "divisible_by_signed_poincare": self.divisible_by_signed,
            "cofactor": None if self.cofactor is None else str(self.cofactor),
            "verdict": self.verdict,
        }
        if self.p_G is not None:
            out.update(
                {
                    "group": self.group,
                    "p_G": str(self.p_G),
                    "det_mod_phi6": str(self.det_mod_phi6),
                    "p_mod_phi6": str(self.p_mod_phi6),
                }
            )
        return out


def divisibility_analysis(system: CoxeterSystem, cap=DET_CAP) -> AppendixReport:
    if system.order > cap:
        raise CapExceeded(f"|W| = {system.order} exceeds the determinant cap {cap}")
    M = build_M(system)
    det = M.det()
    P = poincare(system)
    Ps = poincare(system, signed=True)
    q1, r1 = poly_divrem(det, P)
    div1 = r1.is_zero()
    div2 = False
    cof = None
    if div1:
        q2, r2 = poly_divrem(q1, Ps)
        div2 = r2.is_zero()
        cof = q2 if div2 else None
    else:
        div2 = poly_divrem(det, Ps)[1].is_zero()
    label = system.label or "custom"
    rep = AppendixReport(label, system.order, P, Ps, det, div1, div2, cof)
    pG = POINCARE_TABLE.get(label)
    if pG is not None:
        rep.p_G = pG
        rep.group = GROUP_NAMES[label]
        rep.det_mod_phi6 = reduce_mod(det, PHI6)
        rep.p_mod_phi6 = reduce_mod(pG, PHI6)
        if rep.det_mod_phi6.is_zero() and not rep.p_mod_phi6.is_zero():
            rep.verdict = "unsolvable"
        else:
            rep.verdict = "no obstruction at phi6"
    return rep


def p_G_for(label):
    try:
        return POINCARE_TABLE[label]
    except KeyError:
        raise InputError(f"no built-in Poincare polynomial for {label}; pass p_G explicitly") from None


@dataclass
class ConsistencyReport:
    holds: bool
    polynomial_entries: bool

    @property
    def ok(self):
        return self.holds and self.polynomial_entries


def euler_consistency(system: CoxeterSystem, e_table, p_G) -> ConsistencyReport:
    """Check M E = p_G I for a supplied table E (entries Laurent or rational
    functions); also report whether E has Laurent-polynomial entries."""
    N = system.order
    if isinstance(e_table, Matrix):
        rows = e_table.data
    else:
        rows = e_table
    if len(rows) != N or any(len(r) != N for r in rows):
        raise SizeMismatch(f"E must be {N} x {N}")
    E = Matrix(QQu, [[QQu(x) for x in r] for r in rows], N, N)
    M = build_M(system).map(QQu, QQu)
    target = Matrix.scalar(QQu, N, QQu(p_G))
    holds = (M @ E) == target
    poly = all(x.is_laurent() for r in E.data for x in r)
    return ConsistencyReport(holds, poly)


def rational_solution(system: CoxeterSystem, p_G) -> Matrix:
    """E = p_G M^-1 over Q(u)."""
    M = build_M(system).map(QQu, QQu)
    return M.inverse().scale(QQu(p_G))
