"""Gluing data realized by bimodules over finite-dimensional algebras.

Sites are numbered 0..n-1 internally and 1..n in files and reports.  Site i
carries an algebra R_i with structure tensor C (e_a e_b = sum_c C[a,b,c] e_c).
For i != j the functor C_j -> C_i is M_ij (x)_{R_j} -, where M_ij is an
(R_i, R_j)-bimodule stored through action matrices on column vectors:
``left[a] @ v`` is e_a . v and ``right[b] @ v`` is v . e_b.  The composition
M_ij x M_jk -> M_ik is a tensor N[x, y, z].  When j = i or j = k the tensor is
forced to be the module action, and M_ii is R_i itself.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path

import numpy as np

from ..errors import AssociativityFailure, InputError, MathCheckFailed

DEFAULT_PRIME = 101


@dataclass
class SiteAlgebra:
    mult: np.ndarray  # (m, m, m)
    unit: np.ndarray  # (m,)
    name: str = ""

    @property
    def dim(self):
        return self.mult.shape[0]

    @classmethod
    def field(cls):
        return cls(np.ones((1, 1, 1), dtype=np.int64), np.ones(1, dtype=np.int64), "k")

    @classmethod
    def split(cls, r):
        """k^r with orthogonal idempotents."""
        C = np.zeros((r, r, r), dtype=np.int64)
        for a in range(r):
            C[a, a, a] = 1
        return cls(C, np.ones(r, dtype=np.int64), f"k^{r}")

    def left_regular(self):
        """Matrices of left multiplication: L_a[z, y] = C[a, y, z]."""
        return self.mult.transpose(0, 2, 1).copy()

    def right_regular(self):
        """Matrices of right multiplication: R_b[z, x] = C[x, b, z]."""
        return self.mult.transpose(1, 2, 0).copy()


@dataclass
class Bimodule:
    dim: int
    left: np.ndarray  # (m_i, d, d)
    right: np.ndarray  # (m_j, d, d)


@dataclass
class GluingDatum:
    p: int
    algebras: list
    bimodules: dict = field(default_factory=dict)  # (i, j) -> Bimodule, i != j
    nus: dict = field(default_factory=dict)  # (i, j, k) -> tensor, j not in {i, k}
    labels: list | None = None
    system: object = None  # CoxeterSystem for W-gluing data
    name: str = ""

    def __post_init__(self):
        if self.labels is None:
            self.labels = [str(i + 1) for i in range(self.n)]
        for A in self.algebras:
            A.mult = np.asarray(A.mult, dtype=np.int64) % self.p
            A.unit = np.asarray(A.unit, dtype=np.int64) % self.p

    @property
    def n(self):
        return len(self.algebras)

    def mdim(self, i, j):
        if i == j:
            return self.algebras[i].dim
        M = self.bimodules.get((i, j))
        return 0 if M is None else M.dim

    def bimodule(self, i, j) -> Bimodule:
        if i == j:
            A = self.algebras[i]
            return Bimodule(A.dim, A.left_regular(), A.right_regular())
        M = self.bimodules.get((i, j))
        if M is None:
            mi, mj = self.algebras[i].dim, self.algebras[j].dim
            return Bimodule(0, np.zeros((mi, 0, 0), dtype=np.int64), np.zeros((mj, 0, 0), dtype=np.int64))
        return M

    def nu(self, i, j, k):
        """Composition tensor M_ij x M_jk -> M_ik, shape (m_ij, m_jk, m_ik)."""
        if j == i:
            return self.bimodule(i, k).left.transpose(0, 2, 1)
        if j == k:
            return self.bimodule(i, j).right.transpose(2, 0, 1)
        T = self.nus.get((i, j, k))
        if T is None:
            return np.zeros((self.mdim(i, j), self.mdim(j, k), self.mdim(i, k)), dtype=np.int64)
        return T

    def site_label(self, i):
        return self.labels[i]

    # -- axioms ---------------------------------------------------------------

    def check_shapes(self):
        p = self.p
        for i, A in enumerate(self.algebras):
            m = A.dim
            if A.mult.shape != (m, m, m) or A.unit.shape != (m,):
                raise InputError(f"algebra {i + 1}: structure tensor must be m x m x m with an m-vector unit")
        for (i, j), M in self.bimodules.items():
            if i == j or not (0 <= i < self.n and 0 <= j < self.n):
                raise InputError(f"bimodule ({i + 1}, {j + 1}): bad site pair")
            d = M.dim
            M.left = np.asarray(M.left, dtype=np.int64).reshape(self.algebras[i].dim, d, d) % p
            M.right = np.asarray(M.right, dtype=np.int64).reshape(self.algebras[j].dim, d, d) % p
        for (i, j, k), T in list(self.nus.items()):
            if j in (i, k):
                raise InputError(f"nu ({i + 1}, {j + 1}, {k + 1}) is fixed by the module actions")
            shape = (self.mdim(i, j), self.mdim(j, k), self.mdim(i, k))
            try:
                self.nus[(i, j, k)] = np.asarray(T, dtype=np.int64).reshape(shape) % p
            except ValueError:
                raise InputError(f"nu ({i + 1}, {j + 1}, {k + 1}) must have shape {shape}") from None

    def check_units(self):
        p = self.p
        for i, A in enumerate(self.algebras):
            u = A.unit
            L = np.einsum("a,abc->bc", u, A.mult) % p
            R = np.einsum("b,abc->ac", u, A.mult) % p
            eye = np.eye(A.dim, dtype=np.int64)
            if not (np.array_equal(L, eye) and np.array_equal(R, eye)):
                raise MathCheckFailed(f"algebra {i + 1}: unit vector is not a two-sided unit")
        for (i, j), M in self.bimodules.items():
            eye = np.eye(M.dim, dtype=np.int64)
            L = np.einsum("a,axy->xy", self.algebras[i].unit, M.left) % p
            R = np.einsum("a,axy->xy", self.algebras[j].unit, M.right) % p
            if not (np.array_equal(L, eye) and np.array_equal(R, eye)):
                raise MathCheckFailed(f"bimodule ({i + 1}, {j + 1}): units do not act as the identity")

    def check_associativity(self):
        """Associativity of composition on every site quadruple.

        Quadruples with repeated sites encode associativity of the algebras,
        the bimodule axioms and the balancing of the composition maps."""
        p = self.p
        n = self.n
        for i, j, k, l in product(range(n), repeat=4):
            dims = (self.mdim(i, j), self.mdim(j, k), self.mdim(k, l))
            if 0 in dims or self.mdim(i, l) == 0:
                continue
            lhs = np.einsum("xyd,dzw->xyzw", self.nu(i, j, k), self.nu(i, k, l)) % p
            rhs = np.einsum("yzd,xdw->xyzw", self.nu(j, k, l), self.nu(i, j, l)) % p
            if not np.array_equal(lhs, rhs):
                raise AssociativityFailure(i + 1, j + 1, k + 1, l + 1)
        return True

    def validate(self):
        self.check_shapes()
        self.check_units()
        self.check_associativity()
        return True

    # -- serialization --------------------------------------------------------

    def to_dict(self):
        if self.system is not None and getattr(self, "w_spec", None) is not None:
            return dict(self.w_spec)
        out = {
            "p": self.p,
            "sites": self.n,
            "algebras": [
                {"dim": A.dim, "mult": A.mult.tolist(), "unit": A.unit.tolist(), "name": A.name} for A in self.algebras
            ],
            "bimodules": [
                {"i": i + 1, "j": j + 1, "dim": M.dim, "left": M.left.tolist(), "right": M.right.tolist()}
                for (i, j), M in sorted(self.bimodules.items())
            ],
            "nu": [{"i": i + 1, "j": j + 1, "k": k + 1, "tensor": T.tolist()} for (i, j, k), T in sorted(self.nus.items())],
        }
        if self.name:
            out["name"] = self.name
        return out


def _site(raw, n, where):
    try:
        i = int(raw)
    except (TypeError, ValueError):
        raise InputError(f"{where}: site index must be an integer", where) from None
    if not 1 <= i <= n:
        raise InputError(f"{where}: site {i} outside 1..{n}", where)
    return i - 1


def datum_from_dict(d, p=None) -> GluingDatum:
    if d.get("kind") == "w_gluing":
        from ..coxeter import CoxeterSystem

        system = CoxeterSystem.from_descriptor(d["system"])
        return w_gluing_datum(system, d["t"], p=p or d.get("p", DEFAULT_PRIME), name=d.get("name", ""))
    try:
        prime = int(p or d.get("p", DEFAULT_PRIME))
        algs = []
        for a, A in enumerate(d["algebras"]):
            m = int(A.get("dim", 1))
            mult = A.get("mult")
            unit = A.get("unit")
            if mult is None:
                if m != 1:
                    raise InputError(f"algebras[{a}]: structure constants required for dim {m}", f"algebras[{a}]")
                algs.append(SiteAlgebra.field())
                continue
            algs.append(
                SiteAlgebra(
                    np.asarray(mult, dtype=np.int64).reshape(m, m, m),
                    np.asarray(unit, dtype=np.int64).reshape(m),
                    A.get("name", ""),
                )
            )
        n = len(algs)
        if "sites" in d and int(d["sites"]) != n:
            raise InputError("'sites' disagrees with the number of algebras", "sites")
        bims = {}
        for b, B in enumerate(d.get("bimodules", [])):
            i, j = _site(B["i"], n, f"bimodules[{b}].i"), _site(B["j"], n, f"bimodules[{b}].j")
            dim = int(B["dim"])
            bims[(i, j)] = Bimodule(
                dim,
                np.asarray(B["left"], dtype=np.int64).reshape(algs[i].dim, dim, dim),
                np.asarray(B["right"], dtype=np.int64).reshape(algs[j].dim, dim, dim),
            )
        nus = {}
        for c, N in enumerate(d.get("nu", [])):
            key = tuple(_site(N[x], n, f"nu[{c}].{x}") for x in "ijk")
            nus[key] = np.asarray(N["tensor"], dtype=np.int64)
    except KeyError as e:
        raise InputError(f"gluing datum is missing field {e}") from None
    except ValueError as e:
        raise InputError(f"malformed gluing datum: {e}") from None
    datum = GluingDatum(prime, algs, bims, nus, name=d.get("name", ""))
    datum.check_shapes()
    return datum


def load_datum(path, p=None) -> GluingDatum:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}", str(path)) from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: invalid JSON at line {e.lineno} column {e.colno}", str(path)) from None
    return datum_from_dict(data, p)


DATA_DIR = Path(__file__).resolve().parent.parent / "data"


def shipped_data():
    """Names of the gluing data shipped with the package."""
    return sorted(f.stem for f in DATA_DIR.glob("*.json") if f.stem.startswith("glue_"))


def load_shipped(name, p=None) -> GluingDatum:
    stem = name if name.startswith("glue_") else f"glue_{name}"
    path = DATA_DIR / f"{stem}.json"
    if not path.exists():
        raise InputError(f"no shipped gluing datum named {name!r}; available: {shipped_data()}")
    return load_datum(path, p)


# -- W-gluing ---------------------------------------------------------------


def reflection_classes(system):
    """Partition of the simple reflections into conjugacy classes (odd bonds)."""
    parent = list(range(system.rank))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a in range(system.rank):
        for b in range(a + 1, system.rank):
            if system.matrix[a][b] % 2 == 1:
                parent[find(a)] = find(b)
    roots = sorted({find(a) for a in range(system.rank)})
    return [roots.index(find(a)) for a in range(system.rank)]


def class_lengths(system, w):
    """Number of letters of each reflection class in a reduced word of w."""
    cls = reflection_classes(system)
    out = [0] * (max(cls) + 1)
    for s in w.word:
        out[cls[s - 1]] += 1
    return tuple(out)


def w_gluing_datum(system, t, p=DEFAULT_PRIME, name="") -> GluingDatum:
    """A W-gluing datum with R_w = k^r and every M_{x,y} = k^r.

    Component a of nu_{x,y,z} is the scalar prod_c t[a][c]^e_c where, for
    g = x y^-1 and h = y z^-1, e_c = (l_c(g) + l_c(h) - l_c(gh)) / 2 and l_c
    counts letters of reflection class c.  The exponents form a coboundary,
    so composition is associative; they vanish when lengths add, so the
    W-gluing condition holds.  A zero entry makes Phi_s Phi_s -> Id vanish on
    that component.
    """
    cls = reflection_classes(system)
    nclass = max(cls) + 1
    comps = []
    for a, row in enumerate(t):
        row = [row] * nclass if isinstance(row, (int, np.integer)) else list(row)
        if len(row) != nclass:
            raise InputError(f"t[{a}] needs one value per reflection class ({nclass})")
        comps.append([int(x) % p for x in row])
    r = len(comps)
    if r == 0:
        raise InputError("W-gluing datum needs at least one component")
    els = system.elements
    N = len(els)
    lens = [class_lengths(system, w) for w in els]
    alg = [SiteAlgebra.split(r) for _ in range(N)]
    diag = np.zeros((r, r, r), dtype=np.int64)
    for a in range(r):
        diag[a, a, a] = 1
    bims = {(x, y): Bimodule(r, diag.copy(), diag.copy()) for x in range(N) for y in range(N) if x != y}
    nus = {}
    for x, y, z in product(range(N), repeat=3):
        if y in (x, z):
            continue
        g = els[x] * els[y].inverse()
        h = els[y] * els[z].inverse()
        gh = els[x] * els[z].inverse()
        lg, lh, lgh = lens[g.index], lens[h.index], lens[gh.index]
        ex = [(lg[c] + lh[c] - lgh[c]) // 2 for c in range(nclass)]
        T = np.zeros((r, r, r), dtype=np.int64)
        for a in range(r):
            v = 1
            for c in range(nclass):
                v = v * pow(comps[a][c], ex[c], p) % p
            T[a, a, a] = v
        nus[(x, y, z)] = T
    datum = GluingDatum(p, alg, bims, nus, labels=[str(w) for w in els], system=system, name=name)
    datum.w_spec = {"kind": "w_gluing", "system": system.descriptor(), "t": comps, "p": p}
    if name:
        datum.w_spec["name"] = name
    return datum
