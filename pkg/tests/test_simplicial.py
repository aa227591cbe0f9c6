"""Coefficient systems on a simplex, their chain complexes and homology."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidglue.errors import IncoherentSystem, InputError
from braidglue.exact import QQ, Matrix
from braidglue.simplicial import (
    CoefficientSystem,
    HomlemInstance,
    build_homlem_instance,
    chain_complex,
    coefficient_system_from_instance,
    crafted_violation,
    homlem_fuzz,
    homlem_verdict,
    homology,
    random_homlem_instance,
)

from oracles import homlem_homology_oracle


def test_constant_system_is_acyclic_simplex():
    for n in range(1, 5):
        H = homology(chain_complex(CoefficientSystem.constant(n)))
        assert H == [1] + [0] * (n - 1)


def test_constant_system_augmented_is_exact():
    H = homology(chain_complex(CoefficientSystem.constant(3), include_empty=True))
    assert H == [0, 0, 0, 0]


def test_single_member_at_empty_set():
    # B_a lives on every J (I2 empty, I1 full), B_b on the J containing 1
    cs = build_homlem_instance(["a", "b"], {1: {"a", "b"}, 2: {"a", "b"}}, {1: {"a"}, 2: {"a", "b"}}, {"a": 2, "b": 3})
    assert cs.instance.members(()) == ["a"]
    H = homology(chain_complex(cs))
    assert H == [2, 0]
    assert cs.dim(()) == 2


def test_crafted_violation_fails():
    v = homlem_verdict(crafted_violation())
    assert not v["hypothesis"] and not v["holds"]
    assert any(v["homology"][1:])


def test_fuzz_200():
    out = homlem_fuzz(seed=0, count=200)
    assert out["passed"] == 200 and out["ok"]
    assert not out["negative_control"]["holds"]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_homology_matches_interval_oracle(seed):
    inst = random_homlem_instance(random.Random(seed), enforce=False)
    v = homlem_verdict(inst)
    assert v["homology"] == homlem_homology_oracle(inst)
    if inst.hypothesis():
        assert v["holds"]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_boundary_squares_to_zero_and_euler(seed):
    inst = random_homlem_instance(random.Random(seed))
    cx = chain_complex(coefficient_system_from_instance(inst))
    assert cx.check()
    H = homology(cx)
    assert sum((-1) ** k * h for k, h in enumerate(H)) == cx.euler_characteristic()


def test_incoherent_transitions_rejected():
    one = Matrix.from_rows(QQ, [[1]])
    trans = {((), (1,)): one, ((), (2,)): one, ((), (1, 2)): one, ((2,), (1, 2)): one}
    trans[((1,), (1, 2))] = Matrix.from_rows(QQ, [[2]])
    bad = CoefficientSystem(2, {(): 1, (1,): 1, (2,): 1, (1, 2): 1}, trans)
    with pytest.raises(IncoherentSystem):
        chain_complex(bad)


def test_family_index_out_of_range():
    with pytest.raises(InputError):
        build_homlem_instance(["a"], {3: {"a"}}, {}, {"a": 1}, n=2)


def test_instance_hypothesis_flag():
    inst = HomlemInstance(1, ["x"], {"x": frozenset({1})}, {"x": frozenset()}, {"x": 1})
    assert inst.hypothesis()
