"""Command-line front end.

Every subcommand builds a report dictionary with a top-level "ok" flag and
prints it as JSON or as indented text.  Exit status: 0 when every check
passes, 1 when a mathematical check fails, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .errors import BraidGlueError, InputError, MathCheckFailed, PreconditionFailed

DATA_DIR = Path(__file__).resolve().parent / "data"

# -- input helpers -------------------------------------------------------------


def _system(args, default=None):
    from .coxeter import CoxeterSystem

    kw = {}
    if getattr(args, "cap_group", None):
        kw["cap"] = args.cap_group
    if getattr(args, "cap_geodesics", None):
        kw["path_cap"] = args.cap_geodesics
    if getattr(args, "matrix", None):
        try:
            M = json.loads(args.matrix)
        except json.JSONDecodeError as e:
            raise InputError(f"--matrix is not valid JSON: {e.msg}", f"--matrix column {e.colno}") from None
        return CoxeterSystem(M, **kw)
    label = getattr(args, "type", None) or default
    if label is None:
        raise InputError("a Coxeter system is required (--type or --matrix)")
    return CoxeterSystem.from_label(label, **kw)


def _read_json(path):
    path = Path(path)
    try:
        return json.loads(path.read_text())
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}", str(path)) from None
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON: {e.msg}", f"{path}:{e.lineno}:{e.colno}") from None


def _named(name, prefix):
    stem = name if name.startswith(prefix) else prefix + name
    path = DATA_DIR / f"{stem}.json"
    if not path.exists():
        names = sorted(p.stem[len(prefix):] for p in DATA_DIR.glob(f"{prefix}*.json"))
        raise InputError(f"no shipped file {name!r}; available: {', '.join(names)}")
    return path


def shipped_representations():
    return sorted(p.stem[len("rep_"):] for p in DATA_DIR.glob("rep_*.json"))


def load_representation(path=None, name=None, field=None):
    from .braidrep import BraidRepresentation
    from .exact import field_from_spec

    if path is None and name is None:
        raise InputError("a representation is required (--file or --name)")
    src = Path(path) if path else _named(name, "rep_")
    data = _read_json(src)
    ring = field_from_spec(field) if field else None
    rep = BraidRepresentation.from_dict(data, ring=ring)
    rep.meta = {k: data[k] for k in ("name", "q", "relation") if k in data}
    rep.meta.setdefault("name", src.stem)
    return rep


def _rep(args):
    return load_representation(args.file, args.name, args.field)


def _q(args, rep):
    q = args.q if args.q is not None else getattr(rep, "meta", {}).get("q")
    return None if q is None else rep._scalar(rep.ring(q))


def _datum(args):
    from .gluedalg import load_datum

    if not args.file and not args.name:
        raise InputError("a gluing datum is required (--file or --name)")
    path = args.file or _named(args.name, "glue_")
    p = None
    if args.field:
        spec = args.field
        if not spec.startswith("prime"):
            raise InputError("gluing data live over a prime field, e.g. --field prime:101")
        p = int(spec.partition(":")[2] or 101)
    return load_datum(path, p)


# -- coxeter ---------------------------------------------------------------


def cmd_coxeter_info(args):
    W = _system(args)
    w0 = W.longest
    return {
        "system": W.label or "custom",
        "matrix": [list(r) for r in W.matrix],
        "rank": W.rank,
        "order": W.order,
        "longest": str(w0),
        "longest_length": w0.length,
        "length_distribution": W.length_distribution(),
        "reflections": len(W.reflections),
        "ok": True,
    }


def cmd_coxeter_convexity(args):
    W = _system(args)
    rows = []
    for i in range(1, W.rank + 1):
        P = W.half_set(i)
        rows.append({"i": i, "size": len(P), "convex": W.is_convex(P)})
    return {"system": W.label or "custom", "half_sets": rows, "ok": all(r["convex"] for r in rows)}


def cmd_coxeter_sizig3(args):
    W = _system(args)
    found, missing = [], []
    for i, w in W.sizig3_pairs():
        try:
            j, head, rest = W.sizig3_witness(i, w)
            found.append({"s": i, "w": str(w), "s2": j, "head": str(head), "rest": str(rest)})
        except PreconditionFailed:
            missing.append({"s": i, "w": str(w)})
    out = {"system": W.label or "custom", "pairs": len(found) + len(missing), "witnessed": len(found)}
    if args.verbose:
        out["witnesses"] = found
    out["missing"] = missing
    out["ok"] = not missing
    return out


def appear_check(W):
    """simple_support(y s_i y^-1) = {j : W_{S-j} y inside P_i} for all y in P_i."""
    S = set(range(1, W.rank + 1))
    checked, failures = 0, []
    for i in range(1, W.rank + 1):
        for y in sorted(W.half_set(i)):
            r = y * W.s(i) * y.inverse()
            lhs = set(W.simple_support(r))
            rhs = {j for j in S if W.coset_in_half(S - {j}, y, i)}
            checked += 1
            if lhs != rhs:
                failures.append({"i": i, "y": str(y)})
    return checked, failures


def cmd_coxeter_appear(args):
    W = _system(args)
    checked, failures = appear_check(W)
    return {"system": W.label or "custom", "checked": checked, "failures": failures, "ok": not failures}


def geod_check(W):
    """The geodesic obstruction for all (y, w, i) satisfying its precondition."""
    checked, failures = 0, []
    conj = {}
    for i in range(1, W.rank + 1):
        s = W.s(i)
        for v in W.elements:
            conj[(i, v.index)] = (v * s * v.inverse()).length
    for i in range(1, W.rank + 1):
        for y in W.elements:
            for w in W.elements:
                if conj[(i, y.index)] <= conj[(i, w.index)]:
                    continue
                checked += 1
                if not W.geodesic_obstruction_check(y, w, i):
                    failures.append({"y": str(y), "w": str(w), "i": i})
    return checked, failures


def cmd_coxeter_geod(args):
    W = _system(args)
    checked, failures = geod_check(W)
    return {"system": W.label or "custom", "checked": checked, "failures": failures, "ok": not failures}


# -- representations ---------------------------------------------------------


def cmd_rep_validate(args):
    rep = _rep(args)
    out = {"representation": rep.meta["name"], "system": rep.system.label or "custom"}
    out.update(rep.validate().as_dict())
    q = _q(args, rep)
    if q is not None:
        out["q"] = str(q)
        out["quadratic (s-q)(s+1)=0"] = rep.check_quadratic(q)
        out["cubic (s-q)(s^2-1)=0"] = rep.check_cubic(q)
    return out


def random_one_generator_rep(rng: random.Random, max_dim=6, entry=3):
    """Random invertible integer matrix for the braid group of A1."""
    from .braidrep import BraidRepresentation
    from .coxeter import CoxeterSystem
    from .exact import QQ, Matrix

    W = CoxeterSystem.from_label("A1")
    d = rng.randint(1, max_dim)
    while True:
        M = Matrix.from_rows(QQ, [[QQ(rng.randint(-entry, entry)) for _ in range(d)] for _ in range(d)])
        if M.det() != 0:
            return BraidRepresentation(W, QQ, [M])


def cmd_rep_goodness(args):
    from .kwglue import is_good

    if args.random:
        rng = random.Random(args.seed)
        rows = []
        for k in range(args.random):
            rep = random_one_generator_rep(rng)
            r = is_good(rep)
            rows.append({"instance": k, "dim_V": r.dim_V, "dim_KW": r.dim_KW, "good": r.good})
        return {"system": "A1", "seed": args.seed, "count": args.random, "instances": rows, "ok": all(r["good"] for r in rows)}
    rep = _rep(args)
    rep.require_valid()
    r = is_good(rep, _q(args, rep))
    out = {"representation": rep.meta["name"], "system": rep.system.label or "custom"}
    out.update(r.as_dict())
    out["ok"] = r.good
    return out


def cmd_rep_euler(args):
    from .kwglue import euler_identity_check, kw_space

    rep = _rep(args)
    rep.require_valid()
    ok = euler_identity_check(rep)
    return {"representation": rep.meta["name"], "dim_KW": kw_space(rep).dim, "euler_identity": ok, "ok": ok}


def cmd_rep_half(args):
    from .kwglue import half_identity_check

    rep = _rep(args)
    rep.require_valid()
    idx = [args.i] if args.i else list(range(1, rep.system.rank + 1))
    rows = [{"i": i, "holds": half_identity_check(rep, i)} for i in idx]
    return {"representation": rep.meta["name"], "half_identities": rows, "ok": all(r["holds"] for r in rows)}


def cmd_rep_ideals(args):
    from .errors import WellDefinednessFailure
    from .kwglue import augmentation_image, v_w

    rep = _rep(args)
    rep.require_valid()
    W = rep.system
    rows, bad = [], []
    for w in W.elements:
        try:
            rows.append({"w": str(w), "dim_V_w": v_w(rep, w).dim})
        except WellDefinednessFailure:
            bad.append(str(w))
    aug = augmentation_image(rep)
    top = v_w(rep, W.longest) if str(W.longest) not in bad else None
    aug_ok = top is not None and top == aug
    return {
        "representation": rep.meta["name"],
        "elements": rows,
        "word_dependent": bad,
        "dim_augmentation_image": aug.dim,
        "V_w0 equals augmentation image": aug_ok,
        "ok": not bad and aug_ok,
    }


def cmd_rep_chi(args):
    from .kwglue import chi_pairing

    rep = _rep(args)
    rep.require_valid()
    r = chi_pairing(rep)
    return {
        "representation": rep.meta["name"],
        "gram_size": [r.gram.nrows, r.gram.ncols],
        "nonsingular": r.nonsingular,
        "left_identity": r.left_identity,
        "right_identity": r.right_identity,
        "ok": r.ok,
    }


def cmd_rep_induce(args):
    from .braidrep import BraidRepresentation, induce, parabolic_subsystem
    from .exact import QQ, parse_rational
    from .kwglue import is_good

    W = _system(args, "A2")
    J = sorted(int(j) for j in args.J.split(",")) if args.J else [1]
    sub, order = parabolic_subsystem(W, J)
    if sub is None:
        raise InputError("--J must be nonempty")
    if args.file or args.name:
        inputs = [_rep(args)]
    else:
        values = [v.strip() for v in args.values.split(";")]
        inputs = []
        for v in values:
            parts = [QQ(parse_rational(x)) for x in v.split(",")]
            if len(parts) == 1:
                parts = parts * sub.rank
            inputs.append(BraidRepresentation.scalar(sub, QQ, parts))
    rows = []
    for rep0 in inputs:
        if rep0.system is not sub:
            rep0 = BraidRepresentation(sub, rep0.ring, rep0.gens)
        good_in = is_good(rep0).good
        out = induce(rep0, W, J)
        valid = out.validate().ok
        good_out = is_good(out).good
        rows.append(
            {
                "input": [str(g.data[0][0]) for g in rep0.gens] if rep0.dim == 1 else rep0.to_dict()["generators"],
                "dim": out.dim,
                "validates": valid,
                "input_good": good_in,
                "output_good": good_out,
                "ok": valid and (good_out or not good_in),
            }
        )
    return {"system": W.label or "custom", "J": J, "cases": rows, "ok": all(r["ok"] for r in rows)}


# -- homlem ------------------------------------------------------------------


def cmd_homlem_fuzz(args):
    from .exact import QQ, field_from_spec
    from .simplicial import homlem_fuzz

    ring = field_from_spec(args.field) if args.field else QQ
    r = homlem_fuzz(seed=args.seed, count=args.count, ring=ring)
    out = {
        "seed": r["seed"],
        "count": r["count"],
        "passed": r["passed"],
        "failures": r["failures"],
        "negative_control": {k: v for k, v in r["negative_control"].items()},
        "negative_control_detected": not r["negative_control"]["holds"],
        "ok": r["ok"],
    }
    return out


# -- glued algebras ----------------------------------------------------------


def _gamma_cap(args, default):
    return args.cap_gamma if args.cap_gamma else default


def cmd_glue_assemble(args):
    from .gluedalg import DEFAULT_GAMMA_CAP, assemble

    D = _datum(args)
    cap = _gamma_cap(args, DEFAULT_GAMMA_CAP if D.system is None else 128)
    G = assemble(D, cap)
    return {
        "datum": D.name or "datum",
        "p": D.p,
        "sites": D.n,
        "block_dims": {f"{i + 1},{j + 1}": D.mdim(i, j) for i in range(D.n) for j in range(D.n)},
        "dim Gamma": G.dim,
        "associative": True,
        "unit is sum of site idempotents": G.check_block_structure(),
        "generators": len(G.generators()),
        "ok": G.check_block_structure(),
    }


def cmd_glue_simples(args):
    from .gluedalg import DEFAULT_GAMMA_CAP, assemble, simple_modules, site_dims

    D = _datum(args)
    cap = _gamma_cap(args, DEFAULT_GAMMA_CAP if D.system is None else 128)
    G = assemble(D, cap)
    S = simple_modules(G, seed=args.seed, cap=cap, min_field=args.min_field)
    rows = [
        {"dim": M.dim, "site_dims": site_dims(M), "multiplicity": m} for M, m in zip(S.modules, S.multiplicities)
    ]
    return {
        "datum": D.name or "datum",
        "dim Gamma": G.dim,
        "simples": rows,
        "accounted": S.accounted,
        "certified": S.certified,
        "ok": S.certified,
    }


def cmd_glue_k0(args):
    from .gluedalg import DEFAULT_GAMMA_CAP, k0_verify

    D = _datum(args)
    cap = _gamma_cap(args, DEFAULT_GAMMA_CAP if D.system is None else 128)
    r = k0_verify(D, seed=args.seed, cap=cap, min_field=args.min_field)
    return r.as_dict()


def cmd_glue_supports(args):
    from .gluedalg import support_scan

    D = _datum(args)
    r = support_scan(D, seed=args.seed, cap=_gamma_cap(args, 128), min_field=args.min_field)
    return r.as_dict()


# -- counterexample ----------------------------------------------------------


def cmd_counterexample(args):
    from .counterexample import DET_CAP, divisibility_analysis

    W = _system(args, "A2")
    r = divisibility_analysis(W, cap=args.cap_det or DET_CAP)
    out = r.as_dict()
    ok = r.divisible_by_poincare and r.divisible_by_signed
    if r.p_G is not None and W.label == "A2":
        ok = ok and r.verdict == "unsolvable"
    out["ok"] = ok
    return out


# -- driver ------------------------------------------------------------------


def _common(p, system=False, rep=False, datum=False):
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0)
    if system:
        p.add_argument("--type", help="Coxeter type label, e.g. A2, B3, I2(6)")
        p.add_argument("--matrix", help="Coxeter matrix as JSON")
        p.add_argument("--cap-group", type=int, dest="cap_group")
        p.add_argument("--cap-geodesics", type=int, dest="cap_geodesics")
    if rep or datum:
        p.add_argument("--file", help="input JSON file")
        p.add_argument("--name", help="name of a shipped input")
        p.add_argument("--field", help="field spec: rational, rational_function, prime:p")
    if rep:
        p.add_argument("--q", help="Hecke parameter used for relation checks")
    if datum:
        p.add_argument("--cap-gamma", type=int, dest="cap_gamma")
        p.add_argument("--min-field", type=int, dest="min_field", default=5)


def build_parser():
    ap = argparse.ArgumentParser(prog="braidglue", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    cox = sub.add_parser("coxeter", help="finite Coxeter group combinatorics").add_subparsers(dest="sub", required=True)
    for name, fn, hlp in [
        ("info", cmd_coxeter_info, "order, longest element, length distribution"),
        ("convexity", cmd_coxeter_convexity, "convexity of the half-sets P_i"),
        ("sizig3", cmd_coxeter_sizig3, "witnesses for the rank-two factorization"),
        ("appear", cmd_coxeter_appear, "simple support of y s_i y^-1 versus cosets inside P_i"),
        ("geod", cmd_coxeter_geod, "no geodesic from y to w through y s_i"),
    ]:
        p = cox.add_parser(name, help=hlp)
        _common(p, system=True)
        if name == "sizig3":
            p.add_argument("--verbose", action="store_true")
        p.set_defaults(fn=fn)

    rep = sub.add_parser("rep", help="braid group representations and K_W(V)").add_subparsers(dest="sub", required=True)
    for name, fn, hlp in [
        ("validate", cmd_rep_validate, "braid relations and invertibility"),
        ("goodness", cmd_rep_goodness, "whether K_W(V) is spanned by the sections"),
        ("euler", cmd_rep_euler, "alternating identity over all proper parabolic cosets"),
        ("half", cmd_rep_half, "identity over cosets inside a half-set"),
        ("ideals", cmd_rep_ideals, "V_w along all reduced words and the augmentation image"),
        ("chi", cmd_rep_chi, "pairing between K_W(V) and K_W(V*)"),
        ("induce", cmd_rep_induce, "induction from a parabolic subgroup"),
    ]:
        p = rep.add_parser(name, help=hlp)
        _common(p, system=(name == "induce"), rep=True)
        if name == "goodness":
            p.add_argument("--random", type=int, default=0, help="check this many random A1 representations")
        if name == "half":
            p.add_argument("--i", type=int, default=0)
        if name == "induce":
            p.add_argument("--J", default="1", help="comma separated generator indices")
            p.add_argument(
                "--values", default="1;-1;2;3;-2;1/2;5/3", help="semicolon separated scalar representations of B_J"
            )
        p.set_defaults(fn=fn)

    p = sub.add_parser("homlem-fuzz", help="random coefficient systems and their homology")
    _common(p)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--field")
    p.set_defaults(fn=cmd_homlem_fuzz)

    glue = sub.add_parser("glue", help="gluing algebras and glued modules").add_subparsers(dest="sub", required=True)
    for name, fn, hlp in [
        ("assemble", cmd_glue_assemble, "build and check the gluing algebra"),
        ("simples", cmd_glue_simples, "simple modules of the gluing algebra"),
        ("k0", cmd_glue_k0, "Grothendieck group image versus K(Phi)"),
        ("supports", cmd_glue_supports, "supports of simples over a W-gluing datum"),
    ]:
        p = glue.add_parser(name, help=hlp)
        _common(p, datum=True)
        p.set_defaults(fn=fn)

    p = sub.add_parser("counterexample", help="length matrix determinant and the phi6 obstruction")
    _common(p, system=True)
    p.add_argument("--cap-det", type=int, dest="cap_det")
    p.set_defaults(fn=cmd_counterexample)
    return ap


def _text(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar_text(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}-")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar_text(v)}")
    else:
        lines.append(pad + _scalar_text(obj))
    return lines


def _flat(v):
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) or _flat(x) and isinstance(x, list) for x in v)
    return False


def _scalar_text(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, dict)):
        return json.dumps(v)
    return str(v)


def render(report, fmt):
    if fmt == "json":
        return json.dumps(report, indent=2)
    return "\n".join(_text(report))


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        report = args.fn(args)
    except InputError as e:
        loc = f" (at {e.location})" if getattr(e, "location", None) else ""
        print(f"error: {e}{loc}", file=sys.stderr)
        return 2
    except MathCheckFailed as e:
        print(f"check failed: {e}", file=sys.stderr)
        return 1
    except BraidGlueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    print(render(report, args.format))
    return 0 if report.get("ok", True) else 1


if __name__ == "__main__":
    sys.exit(main())
