"""Finite Coxeter groups against permutation models and brute-force searches."""

from collections import deque
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidglue.coxeter import CoxeterSystem, coxeter_matrix, validate_matrix
from braidglue.cli import appear_check, geod_check
from braidglue.errors import InfiniteGroup, InvalidMatrix, MixedSystems, PreconditionFailed

SYSTEMS = ["A1", "A2", "A3", "B2", "B3", "D4", "I2(6)"]
ORDERS = {"A1": 2, "A2": 6, "A3": 24, "B2": 8, "B3": 48, "D4": 192, "I2(6)": 12}


@pytest.fixture(scope="module")
def systems():
    return {lab: CoxeterSystem.from_label(lab) for lab in SYSTEMS}


def perm_of_word(word, n=4):
    """Product of adjacent transpositions, composed left to right as maps."""
    p = list(range(n))
    for i in word:
        p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def inversions(p):
    return sum(1 for a, b in combinations(range(len(p)), 2) if p[a] > p[b])


def bfs_distances(W, start):
    """Distances in the graph w -- s w, by breadth-first search."""
    dist = {start: 0}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for i in range(1, W.rank + 1):
            u = W.s(i) * v
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def test_orders(systems):
    for lab, W in systems.items():
        assert W.order == ORDERS[lab]


def test_a3_matches_symmetric_group(systems):
    W = systems["A3"]
    perms = {perm_of_word(w.word): w for w in W.elements}
    assert set(perms) == set(permutations(range(4)))
    for p, w in perms.items():
        assert w.length == inversions(p)
    for a in W.elements:
        for b in W.elements[:6]:
            assert perm_of_word((a * b).word) == perm_of_word(a.word + b.word)


def test_length_distribution_poincare(systems):
    assert systems["A2"].length_distribution() == [1, 2, 2, 1]
    assert systems["A3"].length_distribution() == [1, 3, 5, 6, 5, 3, 1]
    assert systems["B2"].length_distribution() == [1, 2, 2, 2, 1]


def test_reduced_words_are_braid_connected(systems):
    W = systems["A3"]
    w0 = max(W.elements, key=lambda w: w.length)
    words = W.reduced_words(w0)
    assert W.count_reduced_words(w0) == len(words) == 16
    assert all(W.element(r) == w0 and len(r) == 6 for r in words)


def test_half_sets_partition(systems):
    for W in systems.values():
        for i in range(1, W.rank + 1):
            P = W.half_set(i)
            Ps = {w * W.s(i) for w in P}
            assert P.isdisjoint(Ps) and P | Ps == set(W.elements)


def test_half_sets_convex(systems):
    for lab in ["A2", "A3", "B2", "I2(6)"]:
        W = systems[lab]
        for i in range(1, W.rank + 1):
            assert W.is_convex(W.half_set(i))


def test_convexity_agrees_with_bfs(systems):
    W = systems["B2"]
    dist = {a: bfs_distances(W, a) for a in W.elements}
    for a in W.elements:
        for b in W.elements:
            assert dist[a][b] == W.distance(a, b)

    def brute_convex(P):
        return all(
            v in P for a in P for b in P for v in W.elements if dist[a][v] + dist[v][b] == dist[a][b]
        )

    els = W.elements
    for mask in range(0, 256, 7):
        P = frozenset(els[k] for k in range(8) if mask >> k & 1)
        assert W.is_convex(P) == brute_convex(P)


def test_geodesics_count_matches_reduced_words(systems):
    W = systems["A3"]
    e = W.element(())
    for w in W.elements:
        assert len(W.geodesics(e, w, cap=100)) == W.count_reduced_words(w)


def test_coset_pointer_brute_force(systems):
    W = systems["A3"]
    for J in [{1}, {1, 2}, {2, 3}]:
        for x in W.right_coset_reps(J):
            coset = W.right_coset(J, x)
            for w in W.elements:
                cp = W.coset_pointer(J, x, w)
                assert cp.p in coset and cp.n * cp.p == w
                assert cp.n.length == min(W.distance(q, w) for q in coset)


def test_sizig3_witnesses_exist(systems):
    for lab in ["A3", "B2"]:
        W = systems[lab]
        pairs = W.sizig3_pairs()
        assert pairs
        for i, w in pairs:
            j, head, rest = W.sizig3_witness(i, w)
            assert j != i and head * rest == w and head.length + rest.length == w.length


def test_sizig3_rejects_bad_input(systems):
    W = systems["A2"]
    with pytest.raises(PreconditionFailed):
        W.sizig3_witness(1, W.element(()))


def test_appear_exhaustive_a3(systems):
    checked, failures = appear_check(systems["A3"])
    assert checked == 36 and failures == []


def test_geodesic_obstruction_exhaustive(systems):
    for lab in ["A2", "B2"]:
        checked, failures = geod_check(systems[lab])
        assert checked > 0 and failures == []


def test_invalid_matrices():
    with pytest.raises(InvalidMatrix):
        validate_matrix([[1, 2], [3, 1]])
    with pytest.raises(InfiniteGroup):
        CoxeterSystem.from_descriptor({"matrix": [[1, 3, 3], [3, 1, 3], [3, 3, 1]]})


def test_mixed_systems():
    a, b = CoxeterSystem.from_label("A2"), CoxeterSystem.from_label("A2")
    with pytest.raises(MixedSystems):
        a.s(1) * b.s(1)


def test_coxeter_matrix_types():
    assert coxeter_matrix("B", 2)[0][1] == 4
    assert coxeter_matrix("I2", m=6)[0][1] == 6


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 3), max_size=10), st.lists(st.integers(1, 3), max_size=10))
def test_group_law_and_length_bounds(w1, w2):
    W = CoxeterSystem.from_label("A3")
    a, b = W.element(tuple(w1)), W.element(tuple(w2))
    assert perm_of_word((a * b).word) == perm_of_word(tuple(w1) + tuple(w2))
    assert abs(a.length - b.length) <= (a * b).length <= a.length + b.length
    assert (a * a.inverse()).is_identity()
