"""End-to-end acceptance checks, one test per criterion.

Each test records a PASS or FAIL line with its wall time; the lines are
printed in the terminal summary and also when the file is run as a script.
All comparisons are exact."""

import random
import time
from fractions import Fraction

import pytest

from braidglue.braidrep import BraidRepresentation, dihedral3_block, dihedral4_block, induce, regular_hecke_rep, sum_of
from braidglue.cli import appear_check, geod_check, load_representation, random_one_generator_rep, shipped_representations
from braidglue.counterexample import divisibility_analysis
from braidglue.coxeter import CoxeterSystem
from braidglue.exact import QQ, LaurentPoly, poly_divrem, reduce_mod
from braidglue.gluedalg import assemble, k0_verify, load_shipped, support_scan
from braidglue.kwglue import (
    augmentation_image,
    chi_pairing,
    euler_identity_check,
    half_identity_check,
    is_good,
    v_w,
)
from braidglue.simplicial import homlem_fuzz

RESULTS = {}


class Criterion:
    """Context manager timing a block and recording PASS/FAIL."""

    def __init__(self, number, title, limit=None):
        self.number, self.title, self.limit = number, title, limit
        self.checks = []

    def check(self, label, value):
        self.checks.append((label, bool(value)))
        return bool(value)

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        self.elapsed = time.perf_counter() - self.start
        if self.limit is not None:
            self.check(f"runtime {self.elapsed:.2f}s < {self.limit}s", self.elapsed < self.limit)
        ok = exc_type is None and all(v for _, v in self.checks)
        failed = [lab for lab, v in self.checks if not v]
        if exc_type is not None:
            failed.append(f"raised {exc_type.__name__}: {exc}")
        status = "PASS" if ok else "FAIL"
        line = f"criterion {self.number:2d} {status}  {self.title}  ({self.elapsed:.2f}s)"
        if failed:
            line += "  failing: " + "; ".join(failed)
        RESULTS[self.number] = line
        print(line)
        return False

    def verdict(self):
        assert all(v for _, v in self.checks), [lab for lab, v in self.checks if not v]


def systems(*labels):
    return [CoxeterSystem.from_label(x) for x in labels]


def test_criterion_01_counterexample():
    with Criterion(1, "length-matrix obstruction for A2", limit=1.0) as c:
        (W,) = systems("A2")
        r = divisibility_analysis(W)
        for f in ("1 + 2u + 2u^2 + u^3", "1 - 2u + 2u^2 - u^3"):
            c.check(f"det divisible by {f}", poly_divrem(r.det_M, LaurentPoly.parse(f))[1].is_zero())
        phi6 = LaurentPoly.parse("u^2 - u + 1")
        c.check("det mod phi6 = 0", reduce_mod(r.det_M, phi6).is_zero())
        pG = LaurentPoly.parse("1 - u^2") * LaurentPoly.parse("1 - u^3")
        c.check("p_G mod phi6 != 0", not reduce_mod(pG, phi6).is_zero())
        c.check("verdict unsolvable", r.verdict == "unsolvable")
    c.verdict()


def test_criterion_02_goodness():
    with Criterion(2, "goodness of desk-scale representations") as c:
        A2, B2 = systems("A2", "B2")
        t = time.perf_counter()
        rng = random.Random(0)
        reps = [random_one_generator_rep(rng) for _ in range(100)]
        c.check("(a) 100 random one-generator representations good", all(is_good(r).good for r in reps))
        c.check("(a) dimensions up to 6", max(r.dim for r in reps) <= 6)
        c.check("(a) < 5s", time.perf_counter() - t < 5)

        t = time.perf_counter()
        for W in (A2, B2):
            rep = regular_hecke_rep(W, 2)
            c.check(f"(b) regular Hecke {W.label} quadratic at q=2", rep.check_quadratic(2))
            c.check(f"(b) regular Hecke {W.label} good", is_good(rep, 2).good)
        c.check("(b) < 5s", time.perf_counter() - t < 5)

        t = time.perf_counter()
        a2_sums = [
            load_representation(name="cubic_a2_q2"),
            sum_of([dihedral3_block(2, 1, system=A2), dihedral3_block(1, -1, system=A2)]),
            sum_of([dihedral3_block(-1, 2, system=A2), BraidRepresentation(A2, QQ, [[[2]], [[2]]])]),
        ]
        for k, rep in enumerate(a2_sums):
            c.check(f"(c) A2 sum {k} satisfies the cubic relation at 2", rep.validate().ok and rep.check_cubic(2))
            c.check(f"(c) A2 sum {k} good", is_good(rep, 2).good)
        c.check("(c) < 5s", time.perf_counter() - t < 5)

        t = time.perf_counter()
        b2_sums = [
            load_representation(name="cubic_b2_q2"),
            sum_of([dihedral4_block(1, 2, -1, 2, system=B2), dihedral4_block(2, -1, 2, 1, system=B2)]),
        ]
        for k, rep in enumerate(b2_sums):
            c.check(f"(d) B2 sum {k} satisfies the cubic relation at 2", rep.validate().ok and rep.check_cubic(2))
            c.check(f"(d) B2 sum {k} good", is_good(rep, 2).good)
        c.check("(d) < 5s", time.perf_counter() - t < 5)
    c.verdict()


def _test_representations():
    """Shipped representations on A2, B2, A3 plus the trivial and sign
    representations of each."""
    reps = [load_representation(name=n) for n in shipped_representations()]
    reps = [r for r in reps if r.system.label in ("A2", "B2", "A3")]
    for W in systems("A2", "B2", "A3"):
        for v in (1, -1):
            reps.append(BraidRepresentation(W, QQ, [[[v]]] * W.rank))
    return reps


def test_criterion_03_ideals():
    with Criterion(3, "V_w independent of the reduced word; V_w0 is the augmentation image") as c:
        for rep in _test_representations():
            W = rep.system
            c.check(f"{W.label} dim {rep.dim} validates", rep.validate().ok)
            try:
                for w in W.elements:
                    v_w(rep, w, check=True)
                well_defined = True
            except Exception:
                well_defined = False
            c.check(f"{W.label} dim {rep.dim}: V_w well defined", well_defined)
            c.check(f"{W.label} dim {rep.dim}: V_w0 = augmentation", v_w(rep, W.longest) == augmentation_image(rep))
    c.verdict()


def test_criterion_04_identities():
    with Criterion(4, "alternating identities on shipped A2 and B2 representations") as c:
        for name in shipped_representations():
            rep = load_representation(name=name)
            if rep.system.label not in ("A2", "B2"):
                continue
            c.check(f"{name}: Euler identity", euler_identity_check(rep))
            for i in range(1, rep.system.rank + 1):
                c.check(f"{name}: half identity i={i}", half_identity_check(rep, i))
    c.verdict()


def test_criterion_05_homology_fuzz():
    with Criterion(5, "200 random coefficient systems are acyclic; crafted violation detected", limit=10.0) as c:
        out = homlem_fuzz(seed=0, count=200, max_n=4, max_T=6, max_dim=3)
        c.check("200 instances hold", out["passed"] == 200)
        c.check("negative control fails", not out["negative_control"]["holds"])
    c.verdict()


def test_criterion_06_coxeter():
    with Criterion(6, "convexity, sizig3 witnesses, appear and geodesic statements", limit=30.0) as c:
        for W in systems("A2", "A3", "B2", "I2(6)"):
            c.check(f"{W.label}: half-sets convex", all(W.is_convex(W.half_set(i)) for i in range(1, W.rank + 1)))
        for W in systems("A3", "B2"):
            pairs = W.sizig3_pairs()
            ok = bool(pairs)
            for i, w in pairs:
                j, head, rest = W.sizig3_witness(i, w)
                ok &= head * rest == w and head.length + rest.length == w.length
            c.check(f"{W.label}: sizig3 witnesses for {len(pairs)} pairs", ok)
        (A3,) = systems("A3")
        checked, failures = appear_check(A3)
        c.check(f"A3: appear exhaustive ({checked} cases)", checked > 0 and not failures)
        for W in systems("A2", "B2"):
            checked, failures = geod_check(W)
            c.check(f"{W.label}: geodesic statement exhaustive ({checked} cases)", checked > 0 and not failures)
    c.verdict()


def test_criterion_07_k0():
    with Criterion(7, "K0 of glued categories over F_101", limit=10.0) as c:
        names = ["product", "triangular", "split"]
        d = load_shipped("split")
        c.check("split has both bimodules nonzero", d.mdim(0, 1) > 0 and d.mdim(1, 0) > 0)
        for name in names:
            G = assemble(load_shipped(name))
            c.check(f"{name}: p = 101", G.p == 101)
            rep = k0_verify(G)
            c.check(f"{name}: span of simple classes = K(Phi)", rep.equal)
            c.check(f"{name}: restrictions of simples simple or zero", all(rep.ressim))
            c.check(f"{name}: middle extension recovers simples", all(rep.gormac))
    c.verdict()


def test_criterion_08_supports():
    with Criterion(8, "supports of simple modules over the A2 W-gluing algebra") as c:
        d = load_shipped("w_a2")
        c.check("datum has a degenerate component", any(0 in row for row in d.w_spec["t"]))
        rep = support_scan(d)
        c.check("W-gluing condition", rep.w_gluing_ok)
        for e in rep.entries:
            c.check(f"simple {e.simple}: W or an intersection of P_i x", e.full or e.is_half_set_intersection)
            c.check(f"simple {e.simple}: convex", e.convex)
        c.check("some support is proper", any(not e.full for e in rep.entries))
    c.verdict()


def test_criterion_09_chi():
    with Criterion(9, "chi pairing on shipped good representations") as c:
        for name in shipped_representations():
            rep = load_representation(name=name)
            r = chi_pairing(rep, rep.dual())
            c.check(f"{name}: Gram matrix nonsingular", r.nonsingular)
            c.check(f"{name}: both adjunction identities", r.left_identity and r.right_identity)
    c.verdict()


INDUCE_VALUES = [Fraction(1), Fraction(-1), Fraction(2), Fraction(3), Fraction(-2), Fraction(1, 2), Fraction(5, 3)]


def test_criterion_10_induction():
    with Criterion(10, "induction from A1 to A2 preserves goodness") as c:
        (A2,) = systems("A2")
        A1 = CoxeterSystem.from_label("A1")
        for q in INDUCE_VALUES:
            rep0 = BraidRepresentation(A1, QQ, [[[q]]])
            good0 = is_good(rep0).good
            out = induce(rep0, A2, [1])
            c.check(f"q={q}: induced representation validates", out.validate().ok)
            if good0:
                c.check(f"q={q}: induced representation good", is_good(out).good)
    c.verdict()


def pytest_terminal_summary_lines():
    return [RESULTS[k] for k in sorted(RESULTS)]


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
