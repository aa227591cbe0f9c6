"""Finite-dimensional representations of generalized braid groups.

A representation assigns an invertible matrix to every simple generator of a
finite Coxeter system; the braid relations are checked exactly.  Braid words
are tuples of signed 1-based generator indices, a negative letter standing
for the inverse generator.

>>> from braidglue.coxeter import CoxeterSystem
>>> from braidglue.exact import QQ
>>> W = CoxeterSystem.from_label("A1")
>>> rho = BraidRepresentation(W, QQ, [[[2]]])
>>> rho.validate().ok
True
>>> rho.act((1, -1)) == rho.identity_matrix()
True
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coxeter import CoxeterSystem, Element
from .errors import BadIndex, DivisionByZero, InputError, KindMismatch, RelationFailed, ValidationFailed
from .exact import QQ, Matrix, field_from_spec


class BraidWord(tuple):
    """Signed generator word; ``BraidWord.parse("1.-2.1")``."""

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text in ("", "e"):
            return cls(())
        try:
            return cls(int(t) for t in text.split("."))
        except ValueError as exc:
            raise InputError(f"bad braid word {text!r}") from exc

    @classmethod
    def positive(cls, word):
        return cls(word)

    def inverse(self):
        return BraidWord(-a for a in reversed(self))

    def __add__(self, other):
        return BraidWord(tuple(self) + tuple(other))

    def image_in_group(self, system: CoxeterSystem) -> Element:
        return system.element(tuple(abs(a) for a in self))

    def __str__(self):
        return ".".join(map(str, self)) if self else "e"


@dataclass
class RelationCheck:
    i: int
    j: int
    m: int
    holds: bool


@dataclass
class ValidationReport:
    dim: int
    invertible: list
    relations: list = field(default_factory=list)

    @property
    def ok(self):
        return all(self.invertible) and all(r.holds for r in self.relations)

    def as_dict(self):
        return {
            "dim": self.dim,
            "ok": self.ok,
            "invertible": list(self.invertible),
            "relations": [{"pair": [r.i, r.j], "m": r.m, "holds": r.holds} for r in self.relations],
        }


def _alternating(mats, i, j, m):
    out = None
    for k in range(m):
        g = mats[i if k % 2 == 0 else j]
        out = g if out is None else out @ g
    return out


class BraidRepresentation:
    """Generator matrices for the braid group of ``system`` over ``ring``."""

    def __init__(self, system: CoxeterSystem, ring, generators):
        self.system = system
        self.ring = ring
        gens = [g if isinstance(g, Matrix) else Matrix.from_rows(ring, g) for g in generators]
        if len(gens) != system.rank:
            raise InputError(f"expected {system.rank} generator matrices, got {len(gens)}")
        dims = set()
        for k, g in enumerate(gens):
            if g.ring != ring:
                raise KindMismatch(f"generator {k + 1} has entries over {g.ring!r}")
            if g.nrows != g.ncols:
                raise InputError(f"generator {k + 1} is not square", location=f"generators[{k}]")
            dims.add(g.nrows)
        if len(dims) > 1:
            raise InputError(f"generator sizes differ: {sorted(dims)}")
        self.dim = dims.pop() if dims else 0
        self.gens = gens
        self._inv = [None] * len(gens)
        self._report = None
        self._tau_cache = {}

    # -- construction helpers
    @classmethod
    def from_dict(cls, data, system=None, ring=None):
        """Parse ``{"system":..., "field":..., "generators":[...]}``."""
        if system is None:
            if "system" not in data:
                raise InputError("representation file needs 'system'")
            system = CoxeterSystem.from_descriptor(data["system"])
        if ring is None:
            ring = field_from_spec(data.get("field", {"kind": "rational"}))
        gens = data.get("generators")
        if not isinstance(gens, list):
            raise InputError("'generators' must be a list of matrices")
        mats = []
        for k, g in enumerate(gens):
            try:
                mats.append(Matrix.from_rows(ring, [[ring(x) for x in row] for row in g]))
            except (TypeError, ValueError) as exc:
                raise InputError(str(exc), location=f"generators[{k}]") from exc
        return cls(system, ring, mats)

    def to_dict(self):
        return {
            "system": self.system.descriptor(),
            "field": self.ring.spec(),
            "generators": [g.to_lists() for g in self.gens],
        }

    @classmethod
    def scalar(cls, system, ring, values):
        """One-dimensional representation s_i -> values[i-1]."""
        return cls(system, ring, [Matrix.scalar(ring, 1, v) for v in values])

    @classmethod
    def trivial(cls, system, ring=QQ, dim=1):
        return cls(system, ring, [Matrix.identity(ring, dim) for _ in range(system.rank)])

    def identity_matrix(self):
        return Matrix.identity(self.ring, self.dim)

    def direct_sum(self, other):
        if other.system is not self.system or other.ring != self.ring:
            raise KindMismatch("direct sum needs a common system and field")
        return BraidRepresentation(
            self.system, self.ring, [Matrix.block_diagonal(self.ring, [a, b]) for a, b in zip(self.gens, other.gens)]
        )

    def conjugate(self, P: Matrix):
        """The representation s -> P^-1 rho(s) P."""
        Pinv = P.inverse()
        return BraidRepresentation(self.system, self.ring, [Pinv @ g @ P for g in self.gens])

    def dual(self):
        """Transpose dual: rho*(s) = rho(s)^T, paired with rho by the standard form."""
        return BraidRepresentation(self.system, self.ring, [g.T for g in self.gens])

    def map_ring(self, f, ring):
        return BraidRepresentation(self.system, ring, [g.map(f, ring) for g in self.gens])

    # -- validation
    def validate(self) -> ValidationReport:
        if self._report is not None:
            return self._report
        invertible = []
        for k, g in enumerate(self.gens):
            try:
                self._inv[k] = g.inverse() if self.dim else g
                invertible.append(True)
            except DivisionByZero:
                invertible.append(False)
        report = ValidationReport(self.dim, invertible)
        n = self.system.rank
        M = self.system.matrix
        for i in range(n):
            for j in range(i + 1, n):
                m = M[i][j]
                lhs = _alternating(self.gens, i, j, m)
                rhs = _alternating(self.gens, j, i, m)
                report.relations.append(RelationCheck(i + 1, j + 1, m, lhs == rhs))
        self._report = report
        return report

    def require_valid(self):
        rep = self.validate()
        if not rep.ok:
            bad = [f"({r.i},{r.j})" for r in rep.relations if not r.holds]
            sing = [str(k + 1) for k, ok in enumerate(rep.invertible) if not ok]
            raise ValidationFailed(f"braid relations failing: {bad}; singular generators: {sing}")
        return self

    # -- evaluation
    def generator(self, i):
        if not 1 <= abs(i) <= self.system.rank or i == 0:
            raise BadIndex(f"generator index {i} out of range 1..{self.system.rank}")
        if i > 0:
            return self.gens[i - 1]
        if self._inv[-i - 1] is None:
            self.validate()
            if self._inv[-i - 1] is None:
                raise DivisionByZero(f"generator {-i} is singular")
        return self._inv[-i - 1]

    def act(self, word) -> Matrix:
        """Matrix of a signed braid word (leftmost letter acts last)."""
        out = self.identity_matrix()
        for a in word:
            out = out @ self.generator(a)
        return out

    def tau(self, w: Element) -> Matrix:
        """Image of the positive lift of w along its ShortLex reduced word."""
        if w.system is not self.system:
            raise InputError("element of another Coxeter system")
        got = self._tau_cache.get(w.index)
        if got is not None:
            return got
        if w.is_identity():
            res = self.identity_matrix()
        else:
            word = w.word
            head = self.system.element(word[:-1])
            res = self.tau(head) @ self.gens[word[-1] - 1]
        self._tau_cache[w.index] = res
        return res

    def tau_consistent(self, w: Element, limit=8) -> bool:
        """Products along several reduced words of w agree."""
        mats = {self.act(r) for r in self.system.reduced_words(w, limit=limit)}
        return len(mats) == 1

    def check_cubic(self, q) -> bool:
        """(rho(s) - q)(rho(s)^2 - 1) = 0 for every generator."""
        q = self._scalar(q)
        one = self.identity_matrix()
        return all(((g - one.scale(q)) @ (g @ g - one)).is_zero() for g in self.gens)

    def check_cubic_u(self, u) -> bool:
        """(rho(s) + u)(rho(s)^2 - 1) = 0 for every generator."""
        return self.check_cubic(-self._scalar(u))

    def check_quadratic(self, q) -> bool:
        """(rho(s) - q)(rho(s) + 1) = 0 for every generator."""
        q = self._scalar(q)
        one = self.identity_matrix()
        return all(((g - one.scale(q)) @ (g + one)).is_zero() for g in self.gens)

    def _scalar(self, q):
        try:
            return self.ring(q)
        except TypeError as exc:
            raise KindMismatch(f"cannot read {q!r} in {self.ring!r}") from exc

    def central_element(self) -> Matrix:
        """tau(w0)^2; commutation with every generator is asserted."""
        t = self.tau(self.system.longest)
        pi = t @ t
        for g in self.gens:
            if pi @ g != g @ pi:
                raise ValidationFailed("tau(w0)^2 does not commute with a generator")
        return pi

    # -- parabolic restriction
    def restrict(self, J):
        """Representation of the braid group of the parabolic subsystem on J.

        J is sorted; its k-th member becomes generator k of the subsystem."""
        sub, order = parabolic_subsystem(self.system, J)
        return BraidRepresentation(sub, self.ring, [self.gens[j - 1] for j in order])

    def __repr__(self):
        return f"BraidRepresentation({self.system.label or 'W'}, dim={self.dim}, {self.ring!r})"


_SUBSYSTEM_CACHE = {}


def parabolic_subsystem(system: CoxeterSystem, J):
    """(CoxeterSystem of W_J, sorted J); generator k of it is s_{J[k-1]}."""
    order = sorted(int(j) for j in J)
    key = (id(system), tuple(order))
    hit = _SUBSYSTEM_CACHE.get(key)
    if hit is not None and hit[0] is system:
        return hit[1], order
    if not order:
        sub = None
    else:
        M = [[system.matrix[a - 1][b - 1] for b in order] for a in order]
        sub = CoxeterSystem(M, label=None)
    _SUBSYSTEM_CACHE[key] = (system, sub)
    return sub, order


def cubic_to_quadratic_transport(rep: BraidRepresentation, q):
    """s -> -rho(s)^-1 for a representation with (s - q)(s + 1) = 0.

    The result satisfies (s + u)(s^2 - 1) = 0 with u = 1/q; both the input
    and output relations are verified.  Returns (representation, report)."""
    q = rep._scalar(q)
    if not rep.check_quadratic(q):
        raise RelationFailed(f"input does not satisfy (s - {q})(s + 1) = 0")
    rep.require_valid()
    out = BraidRepresentation(rep.system, rep.ring, [-rep.generator(-(k + 1)) for k in range(rep.system.rank)])
    u = rep.ring.one / q
    if not out.check_cubic_u(u):
        raise RelationFailed("transported representation fails (s + u)(s^2 - 1) = 0")
    out.require_valid()
    return out, {"cubic_parameter_u": str(u), "cubic_holds": True, "convention": "(s+u)(s^2-1)=0, u=1/q"}


def induce(rep0: BraidRepresentation, system: CoxeterSystem, J) -> BraidRepresentation:
    """Representation of the braid group of W on the sum of copies of V0
    indexed by the minimal left coset representatives of W/W_J.

    s maps the block of x to the block of s x; when x^-1 s x = t lies in W_J
    the map is rho0(t), otherwise it is the identity."""
    J = sorted(int(j) for j in J)
    sub, order = parabolic_subsystem(system, J)
    if order:
        if rep0.system.rank != len(order) or list(map(list, rep0.system.matrix)) != list(map(list, sub.matrix)):
            raise InputError("rep0 is not a representation of the parabolic subsystem on J")
    ring = rep0.ring
    d = rep0.dim
    reps = system.left_coset_reps(J)
    pos = {x: k for k, x in enumerate(reps)}
    N = len(reps) * d
    gens = []
    for i in range(1, system.rank + 1):
        s = system.s(i)
        G = Matrix.zeros(ring, N, N)
        for x in reps:
            src = pos[x]
            t = x.inverse() * s * x
            if t.length == 1 and t.word[0] in J:
                block = rep0.gens[order.index(t.word[0])]
                dst = src
            else:
                block = Matrix.identity(ring, d)
                dst = pos[system.min_left_coset_rep(s * x, J)]
            for a in range(d):
                for b in range(d):
                    G.data[dst * d + a][src * d + b] = block.data[a][b]
        gens.append(G)
    out = BraidRepresentation(system, ring, gens)
    if not out.validate().ok:
        raise ValidationFailed("induced representation fails the braid relations")
    return out


def pure_braid_generators(system: CoxeterSystem):
    """Words tau(w) s^2 tau(w)^-1 for all w in W and simple s."""
    out = []
    for w in system.elements:
        head = BraidWord(w.word)
        for i in range(1, system.rank + 1):
            out.append(head + BraidWord((i, i)) + head.inverse())
    return out


# ---------------------------------------------------------------------------
# standard test representations


def regular_hecke_rep(system: CoxeterSystem, q, ring=QQ) -> BraidRepresentation:
    """Left regular representation of the Iwahori-Hecke algebra with
    (T_s - q)(T_s + 1) = 0 on the basis T_w."""
    q = ring(q)
    N = system.order
    gens = []
    for i in range(1, system.rank + 1):
        G = Matrix.zeros(ring, N, N)
        for w in system.elements:
            sw = system.left_mul(i, w)
            if sw.length > w.length:
                G.data[sw.index][w.index] = ring.one
            else:
                G.data[w.index][w.index] = q - ring.one
                G.data[sw.index][w.index] = q
        gens.append(G)
    return BraidRepresentation(system, ring, gens)


def dihedral3_block(a, b, ring=QQ, system=None) -> BraidRepresentation:
    """Two-dimensional representation of the braid group of A2 with both
    generators having eigenvalues a, b."""
    W = system or CoxeterSystem.from_type("A", 2)
    a, b = ring(a), ring(b)
    T1 = Matrix.from_rows(ring, [[a, ring.one], [ring.zero, b]])
    T2 = Matrix.from_rows(ring, [[b, ring.zero], [-a * b, a]])
    return BraidRepresentation(W, ring, [T1, T2])


def dihedral4_block(a1, b1, a2, b2, ring=QQ, system=None) -> BraidRepresentation:
    """Two-dimensional representation of the braid group of B2; s1 has
    eigenvalues a1, b1 and s2 has eigenvalues a2, b2.  tr(T1 T2) = 0 makes
    (T1 T2)^2 scalar, which gives the length-4 relation."""
    W = system or CoxeterSystem.from_type("B", 2)
    a1, b1, a2, b2 = (ring(x) for x in (a1, b1, a2, b2))
    y = -(a1 * a2 + b1 * b2)
    T1 = Matrix.from_rows(ring, [[a1, ring.one], [ring.zero, b1]])
    T2 = Matrix.from_rows(ring, [[a2, ring.zero], [y, b2]])
    return BraidRepresentation(W, ring, [T1, T2])


def sum_of(reps):
    out = reps[0]
    for r in reps[1:]:
        out = out.direct_sum(r)
    return out
