"""Gluing of braid group representations over W.

For a representation V of the braid group of (W, S) this module computes the
subspaces V_w, the space K_W(V) of tuples (x_w) with x_{sw} - s x_w in V_s,
the sections i_y and their coset versions, the involution iota, goodness,
and the pairing chi between K_W(V) and K_W(V*).

Vectors of the ambient space V^|W| are flat tuples; the coordinate c of the
component at w sits at position ``w.index * dim + c``.

>>> from braidglue.coxeter import CoxeterSystem
>>> from braidglue.braidrep import BraidRepresentation
>>> from braidglue.exact import QQ
>>> W = CoxeterSystem.from_label("A1")
>>> rep = BraidRepresentation.scalar(W, QQ, [2])
>>> kw_space(rep).dim, is_good(rep).good
(2, True)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import lcm

from .braidrep import BraidRepresentation, parabolic_subsystem
from .errors import InputError, NotASection, NotGood, ValidationFailed, WellDefinednessFailure
from .exact import QQ, Matrix, PrimeField, QQu, Subspace

REDUCED_WORD_CAP = 64


# ---------------------------------------------------------------------------
# block operators: dict (row block, column block) -> d x d Matrix


def _block_apply(blocks, vec, d, nrows_blocks, zero):
    out = [zero] * (nrows_blocks * d)
    for (r, c), M in blocks.items():
        seg = vec[c * d : (c + 1) * d]
        if not any(seg):
            continue
        img = M.apply(seg)
        base = r * d
        for a in range(d):
            if img[a]:
                out[base + a] = out[base + a] + img[a]
    return tuple(out)


def _block_add(blocks, key, M, sign=1):
    M = M if sign == 1 else -M
    if key in blocks:
        blocks[key] = blocks[key] + M
    else:
        blocks[key] = M


def _block_to_matrix(ring, blocks, nr, nc, d):
    out = Matrix.zeros(ring, nr * d, nc * d)
    for (r, c), M in blocks.items():
        for a in range(d):
            row = out.data[r * d + a]
            for b in range(d):
                x = M.data[a][b]
                if x:
                    row[c * d + b] = row[c * d + b] + x
    return out


def _linear_conditions(rep, index, d, pairs, vs_quot):
    """Rows of Q_s (x_{sw} - rho(s) x_w) for (i, w, sw) in pairs, over the
    ambient indexed by ``index`` (element -> block position)."""
    ring = rep.ring
    ncols = len(index) * d
    rows = []
    for i, w, sw in pairs:
        Q = vs_quot[i]
        if Q.nrows == 0:
            continue
        QS = Q @ rep.gens[i - 1]
        a, b = index[sw], index[w]
        for r in range(Q.nrows):
            row = [ring.zero] * ncols
            for c in range(d):
                row[a * d + c] = Q.data[r][c]
                row[b * d + c] = row[b * d + c] - QS.data[r][c]
            rows.append(row)
    return rows


class KWSpace:
    """K_W(V) together with the data used to build and probe it."""

    def __init__(self, rep: BraidRepresentation):
        rep.require_valid()
        self.rep = rep
        self.system = W = rep.system
        self.ring = rep.ring
        self.d = rep.dim
        self.N = W.order
        self.ambient = self.N * self.d
        self._vw = {}
        self.V_s = {i: v_s(rep, i) for i in range(1, W.rank + 1)}
        quot = {i: self.V_s[i].quotient_matrix() for i in self.V_s}
        index = {w: w.index for w in W.elements}
        pairs = []
        for w in W.elements:
            for i in range(1, W.rank + 1):
                pairs.append((i, w, W.left_mul(i, w)))
        rows = _linear_conditions(rep, index, self.d, pairs, quot)
        if rows:
            self.basis = Matrix(self.ring, rows, len(rows), self.ambient).kernel()
        else:
            self.basis = Subspace.full(self.ring, self.ambient)

    @property
    def dim(self):
        return self.basis.dim

    def __contains__(self, v):
        return v in self.basis

    def component(self, v, w):
        return tuple(v[w.index * self.d : (w.index + 1) * self.d])

    # -- sections
    def section_matrix(self, y) -> Matrix:
        """i_y as an (|W| d) x d matrix; block w is tau(w y^-1)."""
        W, rep, d = self.system, self.rep, self.d
        yinv = y.inverse()
        blocks = {(w.index, 0): rep.tau(w * yinv) for w in W.elements}
        return _block_to_matrix(self.ring, blocks, self.N, 1, d)

    def sections_matrix(self) -> Matrix:
        """All sections side by side: block (w, y) is tau(w y^-1)."""
        W, rep = self.system, self.rep
        blocks = {}
        for y in W.elements:
            yinv = y.inverse()
            for w in W.elements:
                blocks[(w.index, y.index)] = rep.tau(w * yinv)
        return _block_to_matrix(self.ring, blocks, self.N, self.N, self.d)

    def iota_blocks(self):
        W, rep = self.system, self.rep
        t0 = rep.tau(W.longest)
        return {(w.index, (W.longest * w).index): t0 for w in W.elements}

    def iota(self, v):
        return _block_apply(self.iota_blocks(), v, self.d, self.N, self.ring.zero)

    # -- cosets
    def coset_data(self, J, x):
        """Coset W_J x, the subsystem K-space and the element map.

        Returns (members, sub_kw, embed) where members lists W_J x in the
        subsystem's element order and embed maps subsystem elements to W."""
        W = self.system
        sub, order = parabolic_subsystem(W, J)
        x = W.min_right_coset_rep(x, J)
        if sub is None:
            return [x], None, None
        sub_rep = self.rep.restrict(order)

        def embed(u):
            return W.element(tuple(order[k - 1] for k in u.word)) * x

        members = [embed(u) for u in sub.elements]
        return members, kw_space(sub_rep), embed

    def coset_operator_blocks(self, J, x, rows=None):
        """Blocks of i_{W_J x} p_{W_J x} on the ambient: block (w, p(w)) is
        tau(n(w)), for w in ``rows`` (default all of W)."""
        W, rep = self.system, self.rep
        blocks = {}
        for w in rows if rows is not None else W.elements:
            cp = W.coset_pointer(J, x, w)
            _block_add(blocks, (w.index, cp.p.index), rep.tau(cp.n))
        return blocks

    def v_w(self, w, check=True):
        return v_w(self.rep, w, check=check)


def kw_space(rep: BraidRepresentation) -> KWSpace:
    kw = getattr(rep, "_kw_space", None)
    if kw is None:
        kw = KWSpace(rep)
        rep._kw_space = kw
    return kw


# ---------------------------------------------------------------------------
# subspaces V_s and V_w


def v_s(rep: BraidRepresentation, i) -> Subspace:
    """Image of rho(s_i)^2 - 1."""
    g = rep.generator(i)
    return (g @ g - rep.identity_matrix()).image()


def _fold_word(rep, word, memo):
    """V along a word: V_{s w'} = V_s + rho(s) V_{w'}, memoized on suffixes."""
    word = tuple(word)
    if word in memo:
        return memo[word]
    if not word:
        res = Subspace.zero(rep.ring, rep.dim)
    else:
        tail = _fold_word(rep, word[1:], memo)
        s = word[0]
        res = v_s(rep, s) + tail.image_under(rep.gens[s - 1])
    memo[word] = res
    return res


def v_w(rep: BraidRepresentation, w, check=True, cap=REDUCED_WORD_CAP) -> Subspace:
    """V_w computed along reduced words of w.

    With ``check`` every reduced word (up to ``cap`` of them) is folded and
    the results must coincide; otherwise WellDefinednessFailure."""
    memo = rep.__dict__.setdefault("_vw_memo", {})
    words = rep.system.reduced_words(w, limit=cap if check else 1)
    results = {_fold_word(rep, wd, memo) for wd in words}
    if len(results) != 1:
        raise WellDefinednessFailure(f"V_w for w = {w} depends on the reduced word")
    return results.pop()


def augmentation_image(rep: BraidRepresentation) -> Subspace:
    """Span of (rho(p) - 1) V over the pure braid generators
    p = tau(w) s^2 tau(w)^-1."""
    from .braidrep import pure_braid_generators

    one = rep.identity_matrix()
    vecs = []
    for word in pure_braid_generators(rep.system):
        vecs.extend((rep.act(word) - one).columns())
    return Subspace.span(rep.ring, rep.dim, vecs)


def augmentation_check(rep: BraidRepresentation) -> bool:
    rep.require_valid()
    return v_w(rep, rep.system.longest) == augmentation_image(rep)


# ---------------------------------------------------------------------------
# sections and coset maps


def section_i(rep, y) -> Matrix:
    """i_y : V -> K_W(V); image containment and p_y i_y = id are asserted."""
    kw = kw_space(rep)
    S = kw.section_matrix(y)
    for col in S.columns():
        if col not in kw.basis:
            raise ValidationFailed(f"i_{y} leaves K_W(V)")
    proj = S.submatrix(range(y.index * kw.d, (y.index + 1) * kw.d), range(kw.d))
    if proj != rep.identity_matrix():
        raise ValidationFailed(f"p_y i_y is not the identity for y = {y}")
    return S


def coset_section(rep, J, x) -> Matrix:
    """i_{W_J x} : K_{W_J}(V) -> K_W(V) as a matrix from the subsystem's
    ambient V^{|W_J|} to V^{|W|} (block (w, p(w)) is tau(n(w)))."""
    kw = kw_space(rep)
    W = kw.system
    members, sub_kw, embed = kw.coset_data(J, x)
    pos = {m: k for k, m in enumerate(members)}
    blocks = {}
    for w in W.elements:
        cp = W.coset_pointer(J, x, w)
        _block_add(blocks, (w.index, pos[cp.p]), rep.tau(cp.n))
    return _block_to_matrix(rep.ring, blocks, kw.N, len(members), kw.d)


def coset_projection(rep, J, x) -> Matrix:
    """p_{W_J x} : K_W(V) -> K_{W_J}(V), the restriction to the coset."""
    kw = kw_space(rep)
    members, _, _ = kw.coset_data(J, x)
    blocks = {(k, m.index): rep.identity_matrix() for k, m in enumerate(members)}
    return _block_to_matrix(rep.ring, blocks, len(members), kw.N, kw.d)


def coset_maps_check(rep, J, x) -> dict:
    """p i = id on K_{W_J}(V) and i(K_{W_J}(V)) lies in K_W(V)."""
    kw = kw_space(rep)
    members, sub_kw, _ = kw.coset_data(J, x)
    Sec = coset_section(rep, J, x)
    Pr = coset_projection(rep, J, x)
    sub_basis = sub_kw.basis.rows if sub_kw is not None else Subspace.full(rep.ring, rep.dim).rows
    roundtrip = all(Pr.apply(Sec.apply(b)) == tuple(b) for b in sub_basis)
    inside = all(Sec.apply(b) in kw.basis for b in sub_basis)
    proj_ok = all(Pr.apply(b) in (sub_kw.basis if sub_kw else Subspace.full(rep.ring, rep.dim)) for b in kw.basis.rows)
    return {
        "coset": [str(m) for m in sorted(members)],
        "dim_sub": len(sub_basis),
        "roundtrip": roundtrip,
        "section_in_KW": inside,
        "projection_in_sub": proj_ok,
    }


def iota(rep) -> Matrix:
    """iota(v)_w = tau(w0) v_{w0 w}; iota^2 = pi coordinatewise is asserted
    on K_W(V)."""
    kw = kw_space(rep)
    M = _block_to_matrix(rep.ring, kw.iota_blocks(), kw.N, kw.N, kw.d)
    pi = rep.central_element()
    for b in kw.basis.rows:
        img = M.apply(b)
        if img not in kw.basis:
            raise ValidationFailed("iota leaves K_W(V)")
        twice = M.apply(img)
        expect = tuple(x for w in kw.system.elements for x in pi.apply(kw.component(b, w)))
        if twice != expect:
            raise ValidationFailed("iota^2 differs from pi")
    return M


# ---------------------------------------------------------------------------
# the alternating identities


def euler_identity_check(rep) -> bool:
    """Sum over proper J and right cosets W_J x of (-1)^|J| i p equals
    iota + (-1)^(n-1) on K_W(V)."""
    kw = kw_space(rep)
    W = kw.system
    n = W.rank
    blocks = {}
    S = range(1, n + 1)
    for k in range(n):
        for J in combinations(S, k):
            sign = -1 if k % 2 else 1
            for x in W.right_coset_reps(J):
                for key, M in kw.coset_operator_blocks(J, x).items():
                    _block_add(blocks, key, M, sign)
    for key, M in kw.iota_blocks().items():
        _block_add(blocks, key, M, -1)
    ident = rep.identity_matrix()
    for w in W.elements:
        _block_add(blocks, (w.index, w.index), ident, -1 if (n - 1) % 2 == 0 else 1)
    zero = rep.ring.zero
    return all(not any(_block_apply(blocks, b, kw.d, kw.N, zero)) for b in kw.basis.rows)


def half_space(rep, i):
    """V'_0: tuples over the half-set P_i with the K-conditions imposed on
    pairs w, s w both in P_i.  Returns (elements of P_i in order, Subspace)."""
    rep.require_valid()
    W = rep.system
    P = sorted(W.half_set(i))
    index = {w: k for k, w in enumerate(P)}
    pairs = []
    for w in P:
        for j in range(1, W.rank + 1):
            sw = W.left_mul(j, w)
            if sw in index:
                pairs.append((j, w, sw))
    quot = {j: v_s(rep, j).quotient_matrix() for j in range(1, W.rank + 1)}
    rows = _linear_conditions(rep, index, rep.dim, pairs, quot)
    amb = len(P) * rep.dim
    space = Matrix(rep.ring, rows, len(rows), amb).kernel() if rows else Subspace.full(rep.ring, amb)
    return P, space


def half_identity_terms(system, i):
    """(J, x, sign) over nonempty J and right cosets W_{S-J} x with
    W_{S-{j}} x inside P_i for all j in J."""
    S = frozenset(range(1, system.rank + 1))
    P = system.half_set(i)
    terms = []
    for k in range(1, system.rank + 1):
        for J in combinations(sorted(S), k):
            rest = S - frozenset(J)
            for x in system.right_coset_reps(rest):
                if x not in P:
                    continue
                if all(system.coset_in_half(S - {j}, x, i) for j in J):
                    terms.append((frozenset(J), x, 1 if k % 2 else -1))
    return terms


def half_identity_check(rep, i) -> bool:
    """Sum of (-1)^(|J|-1) i_{W_{S-J}x, P_i} p_{W_{S-J}x} is the identity on V'_0."""
    W = rep.system
    P, space = half_space(rep, i)
    pos = {w: k for k, w in enumerate(P)}
    kw_d = rep.dim
    blocks = {}
    S = frozenset(range(1, W.rank + 1))
    for J, x, sign in half_identity_terms(W, i):
        rest = S - J
        for w in P:
            cp = W.coset_pointer(rest, x, w)
            _block_add(blocks, (pos[w], pos[cp.p]), rep.tau(cp.n), sign)
    zero = rep.ring.zero
    for b in space.rows:
        if _block_apply(blocks, b, kw_d, len(P), zero) != tuple(b):
            return False
    return True


# ---------------------------------------------------------------------------
# goodness


@dataclass
class GoodnessReport:
    dim_V: int
    dim_KW: int
    dim_span_of_sections: int
    section_ranks: dict
    expectations: list = field(default_factory=list)
    note: str | None = None

    @property
    def good(self):
        return self.dim_span_of_sections == self.dim_KW

    @property
    def cokernel_dim(self):
        return self.dim_KW - self.dim_span_of_sections

    def as_dict(self):
        out = {
            "dim_V": self.dim_V,
            "dim_KW": self.dim_KW,
            "dim_span_of_sections": self.dim_span_of_sections,
            "cokernel_dim": self.cokernel_dim,
            "good": self.good,
            "section_ranks": self.section_ranks,
            "expectations": self.expectations,
        }
        if self.note:
            out["note"] = self.note
        return out


def _root_of_unity(ring, q):
    """True/False when decidable for q in ring, None over a prime field."""
    if isinstance(ring, PrimeField):
        return None
    if ring == QQu:
        if not (q.num.is_constant() and q.den == 1):
            return False
        q = q.num.constant_term()
    return q in (1, -1)


def goodness_expectations(rep, q=None):
    """Known goodness results whose relation hypotheses rep satisfies at q."""
    W = rep.system
    label = W.label or ""
    out = []
    if W.rank == 1:
        out.append({"result": "rank one", "applies": True, "hypothesis_checked": True})
    if q is None:
        return out
    q = rep._scalar(q)
    root = _root_of_unity(rep.ring, q)
    found = []
    if rep.check_quadratic(q):
        found.append("quadratic Hecke, q not a root of unity")
    if rep.check_cubic(q):
        if label == "A2":
            found.append("cubic, type A2, q^6 != 1")
        if label in ("A1", "A2", "A3"):
            found.append("cubic, type A_n with n <= 3, q not a root of unity")
        if label == "B2":
            found.append("cubic, type B2, q^8 != 1")
    for name in found:
        out.append({"result": name, "applies": root is False, "hypothesis_checked": root is not None})
    return out


def is_good(rep, q=None) -> GoodnessReport:
    kw = kw_space(rep)
    W = kw.system
    ranks = {}
    for y in W.elements:
        ranks[str(y)] = kw.section_matrix(y).rank()
    span = kw.sections_matrix().rank()
    note = None
    if isinstance(rep.ring, PrimeField):
        note = "unconditional computation, hypothesis unchecked"
    return GoodnessReport(rep.dim, kw.dim, span, ranks, goodness_expectations(rep, q), note)


def specialize(rep, q) -> BraidRepresentation:
    """Substitute u -> q (rational) in a representation over Q(u)."""
    from fractions import Fraction

    from .exact import QQ

    if rep.ring != QQu:
        raise InputError("specialization needs a representation over Q(u)")
    q = Fraction(q)
    return rep.map_ring(lambda a: QQ(a.evaluate(q)), QQ)


# ---------------------------------------------------------------------------
# the pairing chi


@dataclass
class ChiReport:
    gram: Matrix
    nonsingular: bool
    left_identity: bool
    right_identity: bool

    @property
    def ok(self):
        return self.nonsingular and self.left_identity and self.right_identity


def _is_transpose_dual(rep, dual):
    return dual.system is rep.system and all(a.T == b for a, b in zip(rep.gens, dual.gens))


def chi_pairing(rep, rep_dual=None) -> ChiReport:
    """Gram matrix of chi on the echelon bases of K_W(V) and K_W(V*).

    The pairing on sections is <a, pi' b> = <pi a, b>; it descends to
    K_W(V) x K_W(V*) when both sides are good."""
    rep_dual = rep.dual() if rep_dual is None else rep_dual
    if not _is_transpose_dual(rep, rep_dual):
        raise InputError("rep_dual must carry the transposed generator matrices")
    for side, r in (("V", rep), ("V*", rep_dual)):
        if not is_good(r).good:
            raise NotGood(f"{side} is not good; chi is not defined by descent")
    kw, kwd = kw_space(rep), kw_space(rep_dual)
    ring = rep.ring
    d = rep.dim
    if kw.dim == 0:
        return ChiReport(Matrix.zeros(ring, 0, 0), True, True, True)
    Pi_d = kwd.sections_matrix()
    Pi = kw.sections_matrix()
    pre_d = Pi_d.solve_matrix(kwd.basis.basis_matrix())
    pre = Pi.solve_matrix(kw.basis.basis_matrix())
    if pre is None or pre_d is None:
        raise NotGood("section images do not cover K_W")
    K = kw.basis.rows
    Kd = kwd.basis.rows
    n, m = len(K), len(Kd)

    # chi(k_i, k'_j) = <k_i, b_j> with pi'(b_j) = k'_j
    G = Matrix(ring, _rows_times(K, pre_d.data, ring), n, m)
    # the other descent, <a_i, k'_j> with pi(a_i) = k_i, must agree
    Kd_cols = [list(col) for col in zip(*Kd)]
    G2 = Matrix(ring, _rows_times(pre.T.data, Kd_cols, ring), n, m)
    if G != G2:
        raise ValidationFailed("the two descents of chi disagree")
    nonsingular = n == m and G.rank() == n
    # chi(i_y v, k') = <v, p_y k'> and chi(k, i_y v) = <p_y k, v> on basis vectors v
    coords, coords_d, want, want_d = [], [], [], []
    for y in kw.system.elements:
        Sy = kw.section_matrix(y)
        Syd = kwd.section_matrix(y)
        for c in range(d):
            coords.append(kw.basis.coordinates(Sy.column(c)))
            want.append([Kd[j][y.index * d + c] for j in range(m)])
            coords_d.append(kwd.basis.coordinates(Syd.column(c)))
            want_d.append([K[i][y.index * d + c] for i in range(n)])
    left = _rows_times(coords, G.data, ring) == want
    right = _rows_times(coords_d, G.T.data, ring) == want_d
    return ChiReport(G, nonsingular, left, right)


def _rows_times(rows, M, ring):
    """The products r M for a list of rows r; over Q through integers."""
    if not rows or not M:
        return [[ring.zero] * (len(M[0]) if M else 0) for _ in rows]
    ncols = len(M[0])
    if ring == QQ:
        dM = reduce(lcm, (x.denominator for r in M for x in r), 1)
        Mi = [[int(x * dM) for x in r] for r in M]
        out = []
        for r in rows:
            dr = reduce(lcm, (x.denominator for x in r), 1)
            ri = [(k, int(x * dr)) for k, x in enumerate(r) if x]
            den = dr * dM
            out.append([Fraction(sum(a * Mi[k][j] for k, a in ri), den) for j in range(ncols)])
        return out
    return [
        [sum((r[k] * M[k][j] for k in range(len(M)) if r[k]), ring.zero) for j in range(ncols)] for r in rows
    ]


# ---------------------------------------------------------------------------
# two-piece criterion


@dataclass
class GlueCheckReport:
    dim_V_phi: int
    dim_K_h: int
    V_phi_in_K_h: bool
    K_phi_in_K: bool
    K_equals_K_phi: bool
    V_phi_equals_K_h: bool

    @property
    def consistent(self):
        return self.V_phi_in_K_h and self.K_phi_in_K and self.K_equals_K_phi == self.V_phi_equals_K_h


def gluecheck(dim0, dim1, K: Subspace, i0: Matrix, i1: Matrix) -> GlueCheckReport:
    """K inside V0 + V1 with sections i0 : V0 -> K and i1 : V1 -> K."""
    ring = K.ring
    n = dim0 + dim1
    r0, r1 = range(dim0), range(dim0, n)
    for name, sec, rows, dd in (("i0", i0, r0, dim0), ("i1", i1, r1, dim1)):
        if sec.shape != (n, dd):
            raise NotASection(f"{name} has shape {sec.shape}")
        if sec.submatrix(rows, range(dd)) != Matrix.identity(ring, dd):
            raise NotASection(f"{name} is not a section of the projection")
        if any(c not in K for c in sec.columns()):
            raise NotASection(f"{name} does not land in K")
    phi = Matrix.zeros(ring, n, n)
    for a in r1:
        for b in r0:
            phi.data[a][b] = i0.data[a][b]
    for a in r0:
        for b in r1:
            phi.data[a][b] = i1.data[a][b - dim0]
    V_phi = (phi @ phi - Matrix.identity(ring, n)).image()
    K_phi = V_phi.preimage_under(phi - Matrix.identity(ring, n))
    e0 = Subspace.span(ring, n, [[ring.one if j == k else ring.zero for j in range(n)] for k in r0])
    e1 = Subspace.span(ring, n, [[ring.one if j == k else ring.zero for j in range(n)] for k in r1])
    K_h = (K & e0) + (K & e1)
    return GlueCheckReport(V_phi.dim, K_h.dim, V_phi <= K_h, K_phi <= K, K == K_phi, V_phi == K_h)


# ---------------------------------------------------------------------------
# B2 eigenvector statements


FINDI_WORDS = ((), (2,), (1, 2), (-1, 2), (2, 1, 2), (2, -1, 2), (1, 2, -1, 2))


def _joint_space(rep, q):
    one = rep.identity_matrix()
    s1, s2 = rep.gens
    q = rep._scalar(q)
    U = (s1 - one.scale(q)).kernel()
    U2 = ((s2 - one.scale(q)) @ (s2 - one)).kernel()
    return U & U2


def q8mu_check(rep, q) -> dict:
    """On vectors v with s1 v = q v and (s2 - q)(s2 - 1) v = 0, no eigenvector
    of (s1 s2)^2 has eigenvalue 1 or -1."""
    U = _joint_space(rep, q)
    s1, s2 = rep.gens
    X = s1 @ s2 @ s1 @ s2
    one = rep.identity_matrix()
    out = {"dim_joint": U.dim}
    for mu in (1, -1):
        out[f"dim_mu_{mu}"] = (U & (X - one.scale(mu)).kernel()).dim
    out["holds"] = out["dim_mu_1"] == 0 and out["dim_mu_-1"] == 0
    return out


def findi_check(rep, q) -> dict:
    """The span of the seven words applied to each v in the joint space is
    stable under s1 and s2."""
    U = _joint_space(rep, q)
    stable = True
    for v in U.rows:
        span = Subspace.span(rep.ring, rep.dim, [rep.act(wd).apply(v) for wd in FINDI_WORDS])
        stable &= span.is_invariant(rep.gens[0]) and span.is_invariant(rep.gens[1])
    return {"dim_joint": U.dim, "stable": stable}
