"""Finite Coxeter systems.

Elements are enumerated by Todd-Coxeter coset enumeration of the trivial
subgroup, then relabelled in ShortLex order of their normal forms.  Generator
indices are 1-based everywhere in the public interface; words are tuples of
such indices.

>>> W = CoxeterSystem.from_type("A", 2)
>>> W.order, W.longest.length
(6, 3)
>>> s1, s2 = W.gens
>>> s1 * s2 * s1 == s2 * s1 * s2
True
>>> sorted(str(w) for w in W.half_set(1))
['1.2', '2', 'e']
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import numpy as np

from .errors import (
    InfiniteGroup,
    InputError,
    InvalidMatrix,
    MixedSystems,
    NotAReflection,
    PathExplosion,
    PreconditionFailed,
)

DEFAULT_GROUP_CAP = 50000
DEFAULT_PATH_CAP = 100000
_TABLE_LIMIT = 2048


# ---------------------------------------------------------------------------
# Coxeter matrices of the supported types


def coxeter_matrix(kind: str, rank: int | None = None, m: int | None = None):
    """Coxeter matrix for A_n, B_n, D_n or I2(m); generators numbered along
    the Dynkin diagram (the doubled bond of B_n sits between 1 and 2)."""
    kind = kind.upper()
    if kind in ("I2", "I"):
        if m is None:
            raise InputError("I2 needs the bond label m")
        if not 2 <= m <= 12:
            raise InputError(f"I2(m) supported for 2 <= m <= 12, got {m}")
        return [[1, m], [m, 1]]
    if rank is None or rank < 1:
        raise InputError(f"type {kind} needs a positive rank")
    M = [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]

    def bond(i, j, v):
        M[i][j] = M[j][i] = v

    if kind == "A":
        if rank > 5:
            raise InputError("type A supported up to rank 5")
        for i in range(rank - 1):
            bond(i, i + 1, 3)
    elif kind == "B":
        if rank > 4:
            raise InputError("type B supported up to rank 4")
        for i in range(rank - 1):
            bond(i, i + 1, 4 if i == 0 else 3)
    elif kind == "D":
        if rank != 4:
            raise InputError("type D supported for rank 4")
        bond(0, 1, 3)
        bond(1, 2, 3)
        bond(1, 3, 3)
    else:
        raise InputError(f"unsupported Coxeter type {kind!r}")
    return M


def parse_type_label(label: str):
    """'A2' -> ('A', 2, None), 'I2(6)' -> ('I2', 2, 6)."""
    import re

    s = label.strip().upper().replace(" ", "")
    m = re.fullmatch(r"I2\((\d+)\)", s)
    if m:
        return "I2", 2, int(m.group(1))
    m = re.fullmatch(r"([ABD])_?(\d+)", s)
    if not m:
        raise InputError(f"cannot parse Coxeter type {label!r}")
    return m.group(1), int(m.group(2)), None


def validate_matrix(M):
    n = len(M)
    if n == 0:
        raise InvalidMatrix("empty Coxeter matrix")
    for i in range(n):
        if len(M[i]) != n:
            raise InvalidMatrix("Coxeter matrix must be square")
        for j in range(n):
            v = M[i][j]
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidMatrix(f"entry ({i + 1},{j + 1}) is not an integer")
            if i == j and v != 1:
                raise InvalidMatrix(f"diagonal entry ({i + 1},{i + 1}) must be 1")
            if i != j and (v < 2 or v != M[j][i]):
                raise InvalidMatrix(f"entry ({i + 1},{j + 1}) must be symmetric and >= 2")


# ---------------------------------------------------------------------------
# Todd-Coxeter enumeration (HLT with coincidence processing)


def _todd_coxeter(M, limit):
    """Right-regular action table of the group on itself, as a list of rows.

    All generators are involutions, so the table is its own inverse table.
    Raises InfiniteGroup if more than ``limit`` cosets get defined."""
    n = len(M)
    relators = []
    for i in range(n):
        for j in range(i + 1, n):
            relators.append([i, j] * M[i][j])
    table = [[None] * n]
    parent = [0]
    defined = 1

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    def define(c, x):
        nonlocal defined
        d = len(table)
        table.append([None] * n)
        parent.append(d)
        table[c][x] = d
        table[d][x] = c
        defined += 1
        if defined > limit:
            raise InfiniteGroup(f"coset enumeration exceeded {limit} cosets")

    def coincidence(a, b):
        queue = []

        def merge(k, l):
            k, l = find(k), find(l)
            if k != l:
                lo, hi = min(k, l), max(k, l)
                parent[hi] = lo
                queue.append(hi)

        merge(a, b)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(n):
                f = table[e][x]
                if f is None:
                    continue
                if table[f][x] == e:
                    table[f][x] = None
                e1, f1 = find(e), find(f)
                if table[e1][x] is not None:
                    merge(f1, table[e1][x])
                elif table[f1][x] is not None:
                    merge(e1, table[f1][x])
                else:
                    table[e1][x] = f1
                    table[f1][x] = e1

    def scan_and_fill(c, word):
        f = b = c
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][word[j]] is not None:
                b = table[b][word[j]]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if i == j:
                table[f][word[i]] = b
                table[b][word[i]] = f
                return
            define(f, word[i])

    c = 0
    while c < len(table):
        if find(c) == c:
            for rel in relators:
                if find(c) != c:
                    break
                scan_and_fill(c, rel)
            if find(c) == c:
                for x in range(n):
                    if table[c][x] is None:
                        define(c, x)
        c += 1

    alive = [c for c in range(len(table)) if find(c) == c]
    index = {c: k for k, c in enumerate(alive)}
    return [[index[find(table[c][x])] for x in range(n)] for c in alive]


# ---------------------------------------------------------------------------


class Element:
    """Group element: a handle into the element table of its system."""

    __slots__ = ("system", "index")

    def __init__(self, system, index):
        self.system = system
        self.index = index

    def _same(self, other):
        if not isinstance(other, Element):
            raise TypeError(f"expected a group element, got {other!r}")
        if other.system is not self.system:
            raise MixedSystems("elements belong to different Coxeter systems")

    def __mul__(self, other):
        self._same(other)
        return Element(self.system, self.system._mul(self.index, other.index))

    def inverse(self):
        return Element(self.system, self.system._inv[self.index])

    @property
    def length(self):
        return int(self.system._len[self.index])

    @property
    def word(self):
        return self.system._words[self.index]

    def is_identity(self):
        return self.index == 0

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.system is other.system and self.index == other.index

    def __hash__(self):
        return hash(self.index)

    def __lt__(self, other):
        self._same(other)
        return self.index < other.index

    def __str__(self):
        return format_word(self.word)

    def __repr__(self):
        return f"<{self}>"


def format_word(word):
    return ".".join(str(i) for i in word) if word else "e"


def parse_word(text: str):
    text = text.strip()
    if text in ("", "e", "1"):
        return ()
    try:
        return tuple(int(t) for t in text.split("."))
    except ValueError as exc:
        raise InputError(f"bad word {text!r}") from exc


@dataclass(frozen=True)
class CosetPointer:
    """w = n * p with p the element of W_J x nearest to w."""

    J: frozenset
    x: Element
    w: Element
    p: Element
    n: Element


class CoxeterSystem:
    """A finite Coxeter system (W, S) with all elements enumerated."""

    def __init__(self, matrix, label=None, cap=DEFAULT_GROUP_CAP, path_cap=DEFAULT_PATH_CAP):
        matrix = [[int(x) if isinstance(x, (int, np.integer)) else x for x in row] for row in matrix]
        validate_matrix(matrix)
        self.matrix = tuple(tuple(r) for r in matrix)
        self.rank = len(matrix)
        self.label = label
        self.cap = cap
        self.path_cap = path_cap
        coset_limit = max(8 * cap, 1000)
        right = _todd_coxeter(matrix, coset_limit)
        if len(right) > cap:
            raise InfiniteGroup(f"group order {len(right)} exceeds cap {cap}")
        self._build_tables(right)

    # -- construction helpers
    @classmethod
    def from_type(cls, kind, rank=None, m=None, **kw):
        M = coxeter_matrix(kind, rank, m)
        label = f"I2({m})" if kind.upper() in ("I", "I2") else f"{kind.upper()}{rank}"
        return cls(M, label=label, **kw)

    @classmethod
    def from_label(cls, label, **kw):
        kind, rank, m = parse_type_label(label)
        return cls.from_type(kind, rank, m, **kw)

    @classmethod
    def from_descriptor(cls, desc, **kw):
        """{"type": "A", "rank": 2}, {"type": "I2", "m": 6} or {"matrix": [[1,3],[3,1]]}."""
        if isinstance(desc, str):
            return cls.from_label(desc, **kw)
        if "matrix" in desc:
            return cls(desc["matrix"], label=desc.get("label"), **kw)
        if "type" in desc:
            t = str(desc["type"])
            if t.upper().startswith("I2("):
                return cls.from_label(t, **kw)
            if "rank" not in desc and "m" not in desc:
                return cls.from_label(t, **kw)
            return cls.from_type(t, desc.get("rank", 2), desc.get("m"), **kw)
        raise InputError("system descriptor needs 'type' or 'matrix'")

    def descriptor(self):
        return {"matrix": [list(r) for r in self.matrix]} if not self.label else self._label_descriptor()

    def _label_descriptor(self):
        kind, rank, m = parse_type_label(self.label)
        if kind == "I2":
            return {"type": "I2", "m": m}
        return {"type": kind, "rank": rank}

    def _build_tables(self, right):
        n = self.rank
        N = len(right)
        # BFS from the identity appending generators in increasing order gives
        # ShortLex-least words for every element.
        order = [0]
        word = {0: ()}
        head = 0
        while head < len(order):
            c = order[head]
            head += 1
            for x in range(n):
                d = right[c][x]
                if d not in word:
                    word[d] = word[c] + (x + 1,)
                    order.append(d)
        relabel = {c: k for k, c in enumerate(order)}
        self.order = N
        self._words = [word[c] for c in order]
        self._len = np.array([len(w) for w in self._words], dtype=np.int64)
        R = np.empty((N, n), dtype=np.int64)
        for c in order:
            for x in range(n):
                R[relabel[c], x] = relabel[right[c][x]]
        self._right = R
        # left multiplication by s: s * w computed from the word of w
        L = np.empty((N, n), dtype=np.int64)
        for x in range(n):
            for k in range(N):
                L[k, x] = self._eval_from(int(R[0, x]), self._words[k])
        self._left = L
        inv = np.empty(N, dtype=np.int64)
        for k in range(N):
            inv[k] = self._eval_from(0, tuple(reversed(self._words[k])))
        self._inv = inv
        self._table = None
        if N <= _TABLE_LIMIT:
            T = np.empty((N, N), dtype=np.int32)
            T[:, 0] = np.arange(N)
            for k in range(1, N):
                w = self._words[k]
                parent = self._index_of_word(w[:-1])
                T[:, k] = R[T[:, parent], w[-1] - 1]
            self._table = T
        self.elements = [Element(self, k) for k in range(N)]
        self.identity = self.elements[0]
        self.gens = [self.elements[int(R[0, x])] for x in range(n)]
        self.longest = self.elements[int(np.argmax(self._len))]

    def _eval_from(self, start, word):
        c = start
        R = self._right
        for s in word:
            c = int(R[c, s - 1])
        return c

    def _index_of_word(self, word):
        return self._eval_from(0, word)

    def _mul(self, a, b):
        if self._table is not None:
            return int(self._table[a, b])
        return self._eval_from(a, self._words[b])

    # -- basic queries
    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return f"CoxeterSystem({self.label or list(map(list, self.matrix))}, order={self.order})"

    def s(self, i) -> Element:
        self._check_index(i)
        return self.gens[i - 1]

    def _check_index(self, i):
        if not (isinstance(i, (int, np.integer)) and 1 <= i <= self.rank):
            raise InputError(f"generator index {i} out of range 1..{self.rank}")

    def _own(self, w):
        if not isinstance(w, Element):
            raise TypeError(f"expected a group element, got {w!r}")
        if w.system is not self:
            raise MixedSystems("element belongs to a different Coxeter system")

    def element(self, word) -> Element:
        """Element represented by a word (tuple of 1-based indices or '1.2.1')."""
        if isinstance(word, str):
            word = parse_word(word)
        for i in word:
            self._check_index(i)
        return self.elements[self._eval_from(0, tuple(word))]

    def multiply(self, w1, w2):
        return w1 * w2

    def invert(self, w):
        return w.inverse()

    def length(self, w):
        self._own(w)
        return w.length

    def left_mul(self, i, w) -> Element:
        """s_i * w"""
        return self.elements[int(self._left[w.index, i - 1])]

    def right_mul(self, w, i) -> Element:
        """w * s_i"""
        return self.elements[int(self._right[w.index, i - 1])]

    def is_length_additive(self, w1, w2) -> bool:
        self._own(w1)
        self._own(w2)
        return (w1 * w2).length == w1.length + w2.length

    def right_descents(self, w):
        return [i for i in range(1, self.rank + 1) if self._len[self._right[w.index, i - 1]] < self._len[w.index]]

    def left_descents(self, w):
        return [i for i in range(1, self.rank + 1) if self._len[self._left[w.index, i - 1]] < self._len[w.index]]

    def reduced_words(self, w, limit=None):
        """All reduced words of w (up to ``limit`` of them), in lexicographic order."""
        self._own(w)
        out = []

        def rec(k, suffix):
            if limit is not None and len(out) >= limit:
                return
            if k == 0:
                out.append(tuple(reversed(suffix)))
                return
            for i in range(1, self.rank + 1):
                j = int(self._right[k, i - 1])
                if self._len[j] < self._len[k]:
                    suffix.append(i)
                    rec(j, suffix)
                    suffix.pop()
                    if limit is not None and len(out) >= limit:
                        return

        rec(w.index, [])
        return sorted(out)

    def count_reduced_words(self, w) -> int:
        counts = {0: 1}
        for k in sorted(range(self.order), key=lambda k: self._len[k]):
            if k == 0:
                continue
            counts[k] = sum(
                counts[int(self._right[k, i])] for i in range(self.rank) if self._len[self._right[k, i]] < self._len[k]
            )
        return counts[w.index]

    # -- parabolic subgroups and cosets
    def _normalize_J(self, J):
        J = frozenset(int(j) for j in J)
        for j in J:
            self._check_index(j)
        return J

    def parabolic(self, J):
        """Elements of W_J, by closure under right multiplication."""
        J = self._normalize_J(J)
        seen = {0}
        stack = [0]
        while stack:
            c = stack.pop()
            for j in J:
                d = int(self._right[c, j - 1])
                if d not in seen:
                    seen.add(d)
                    stack.append(d)
        return [self.elements[k] for k in sorted(seen)]

    def parabolic_longest(self, J):
        return max(self.parabolic(J), key=lambda w: w.length)

    def min_left_coset_rep(self, w, J):
        """Shortest element of w W_J (strip right descents in J)."""
        J = self._normalize_J(J)
        k = w.index
        changed = True
        while changed:
            changed = False
            for j in sorted(J):
                d = int(self._right[k, j - 1])
                if self._len[d] < self._len[k]:
                    k = d
                    changed = True
        return self.elements[k]

    def min_right_coset_rep(self, w, J):
        """Shortest element of W_J w (strip left descents in J)."""
        J = self._normalize_J(J)
        k = w.index
        changed = True
        while changed:
            changed = False
            for j in sorted(J):
                d = int(self._left[k, j - 1])
                if self._len[d] < self._len[k]:
                    k = d
                    changed = True
        return self.elements[k]

    def right_coset(self, J, x):
        """W_J x, sorted ShortLex."""
        return sorted(u * x for u in self.parabolic(J))

    def left_coset(self, x, J):
        return sorted(x * u for u in self.parabolic(J))

    def right_coset_reps(self, J):
        """Minimal representatives x of the right cosets W_J x, ShortLex order."""
        J = self._normalize_J(J)
        return sorted({self.min_right_coset_rep(w, J) for w in self.elements})

    def left_coset_reps(self, J):
        """Minimal representatives x of the left cosets x W_J, ShortLex order."""
        J = self._normalize_J(J)
        return sorted({self.min_left_coset_rep(w, J) for w in self.elements})

    def coset_pointer(self, J, x, w) -> CosetPointer:
        """Decompose w = n * p with p in W_J x and n of minimal length.

        n is the shortest element of w x^-1 W_J."""
        J = self._normalize_J(J)
        self._own(x)
        self._own(w)
        n = self.min_left_coset_rep(w * x.inverse(), J)
        p = n.inverse() * w
        return CosetPointer(J, self.min_right_coset_rep(x, J), w, p, n)

    # -- half-sets, geodesics, convexity
    def half_set(self, i, side="right"):
        """Right: {w : l(w s_i) > l(w)}.  Left: {w : l(s_i w) > l(w)}."""
        self._check_index(i)
        tab = self._right if side == "right" else self._left
        if side not in ("right", "left"):
            raise InputError(f"side must be 'left' or 'right', got {side!r}")
        return frozenset(self.elements[k] for k in range(self.order) if self._len[tab[k, i - 1]] > self._len[k])

    def distance(self, a, b) -> int:
        """Distance in the graph with edges w -- s w, i.e. l(b a^-1)."""
        return (b * a.inverse()).length

    def interval(self, a, b):
        """Vertices lying on some geodesic from a to b."""
        d = self.distance(a, b)
        return frozenset(v for v in self.elements if self.distance(a, v) + self.distance(v, b) == d)

    def geodesics(self, w1, w2, cap=None):
        """All shortest paths w1 -> w2 with steps v -> s v (left multiplication)."""
        self._own(w1)
        self._own(w2)
        cap = self.path_cap if cap is None else cap
        target = w2.index
        paths = []
        # steps from w1 correspond to reading a reduced word of w2 w1^-1 right to left
        g = (w2 * w1.inverse()).index

        def rec(cur, rest, path):
            if rest == 0:
                paths.append(tuple(self.elements[k] for k in path))
                if len(paths) > cap:
                    raise PathExplosion(f"more than {cap} geodesics")
                return
            for i in range(self.rank):
                r2 = int(self._right[rest, i])
                if self._len[r2] < self._len[rest]:
                    nxt = int(self._left[cur, i])
                    path.append(nxt)
                    rec(nxt, r2, path)
                    path.pop()

        rec(w1.index, g, [w1.index])
        assert all(p[-1].index == target for p in paths)
        return sorted(paths, key=lambda p: [v.index for v in p])

    def is_convex(self, P) -> bool:
        """Every geodesic between two members of P stays inside P."""
        P = frozenset(P)
        for w in P:
            self._own(w)
        members = sorted(P)
        idx = np.array([w.index for w in members], dtype=np.int64)
        if self._table is not None:
            inv = self._inv
            inside = np.zeros(self.order, dtype=bool)
            inside[idx] = True
            # dist[a][v] = l(v a^-1) for all v
            for a in idx:
                da = self._len[self._table[:, inv[a]]]
                for b in idx:
                    if b <= a:
                        continue
                    db = self._len[self._table[:, inv[b]]]
                    on = (da + db) == da[b]
                    if np.any(on & ~inside):
                        return False
            return True
        return all(self.interval(a, b) <= P for a, b in combinations(members, 2))

    # -- reflections, simple supports and cosets inside half-sets
    @cached_property
    def reflections(self):
        refl = set()
        for w in self.elements:
            for s in self.gens:
                refl.add(w * s * w.inverse())
        return frozenset(refl)

    def simple_support(self, r):
        """Simple reflections occurring in a reduced word of the reflection r."""
        self._own(r)
        if r not in self.reflections:
            raise NotAReflection(f"{r} is not a reflection")
        return frozenset(r.word)

    def coset_in_half(self, J, y, i) -> bool:
        """Whether W_J y lies in the right half-set P_i, via y s_i y^-1 not in W_J."""
        J = self._normalize_J(J)
        self._own(y)
        if y not in self.half_set(i):
            raise PreconditionFailed(f"{y} is not in P_{i}")
        r = y * self.s(i) * y.inverse()
        return not set(r.word) <= J

    def geodesic_obstruction_check(self, y, w, i) -> bool:
        """True iff no geodesic from y to w passes through y s_i.

        Requires l(y s_i y^-1) > l(w s_i w^-1); y = w is vacuously true."""
        self._own(y)
        self._own(w)
        if y == w:
            return True
        si = self.s(i)
        if not (y * si * y.inverse()).length > (w * si * w.inverse()).length:
            raise PreconditionFailed("need l(y s_i y^-1) > l(w s_i w^-1)")
        v = y * si
        return self.distance(y, v) + self.distance(v, w) != self.distance(y, w)

    def dihedral_longest(self, i, j):
        return self.parabolic_longest({i, j})

    def sizig3_witness(self, i, w):
        """For s = s_i and w with s w = w s' (s' simple), l(s w) = l(w) + 1,
        w != e: find s2 = s_j (j != i) and w' with w = w(s, s2) w' length
        additively, where w(s, s2) = s^-1 w0(s, s2).

        Returns (j, w(s, s2), w')."""
        self._own(w)
        s = self.s(i)
        if w.is_identity():
            raise PreconditionFailed("w must differ from the identity")
        sw = s * w
        if sw.length != w.length + 1:
            raise PreconditionFailed("need l(s w) = l(w) + 1")
        sprime = w.inverse() * sw
        if sprime not in self.gens:
            raise PreconditionFailed("s w = w s' has no simple solution s'")
        for j in range(1, self.rank + 1):
            if j == i:
                continue
            head = s.inverse() * self.dihedral_longest(i, j)
            rest = head.inverse() * w
            if head.length + rest.length == w.length:
                return j, head, rest
        raise PreconditionFailed(f"no witness for s_{i} and {w}")

    def sizig3_pairs(self):
        """All valid (i, w) for sizig3_witness."""
        out = []
        for w in self.elements:
            if w.is_identity():
                continue
            for i in range(1, self.rank + 1):
                sw = self.left_mul(i, w)
                if sw.length == w.length + 1 and (w.inverse() * sw) in self.gens:
                    out.append((i, w))
        return out

    def length_distribution(self):
        counts = np.bincount(self._len)
        return [int(c) for c in counts]


def build_system(coxeter_matrix_or_descriptor, **kw) -> CoxeterSystem:
    if isinstance(coxeter_matrix_or_descriptor, (dict, str)):
        return CoxeterSystem.from_descriptor(coxeter_matrix_or_descriptor, **kw)
    return CoxeterSystem(coxeter_matrix_or_descriptor, **kw)
