"""Command-line front end: ``planeaut <command> ...``.

Curves are given as ``key=value`` tokens::

    d=5 type=8,1,4 alpha=1 beta=3        a family member; alpha/beta fill every slot
    d=5 type=8,1,4 alpha=1 X^3Z^2=3      individual slots by monomial name
    d=5 type=4,1,3                       random member (see --seed)
    d=5 coeffs=[(5,0,0,1),(0,4,1,1),(1,0,4,1)]
    poly=X^5+Y^4*Z+X*Z^4

Projective maps use bracket notation, the i-th slot being the image
coordinate: ``[X;Y;xi4*Z]`` where ``xi<m>`` is the chosen primitive m-th
root of unity in F_p.
"""

from __future__ import annotations

import argparse
import ast
import csv
import io
import json
import re
import sys

from . import __version__, ff

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# output


class Table:
    def __init__(self, command: str, columns: list[str], rows: list[dict], meta: dict | None = None):
        self.command = command
        self.columns = columns
        self.rows = rows
        self.meta = meta or {}

    def to_json_obj(self) -> dict:
        return {"command": self.command, "columns": self.columns, "meta": self.meta, "rows": self.rows}


def dump_json(obj) -> str:
    """Canonical JSON: loading and dumping again reproduces the same bytes."""
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _cell(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, dict):
        return " ".join(f"{k}:{_cell(x)}" for k, x in v.items())
    if isinstance(v, list):
        if v and all(isinstance(x, list) for x in v):
            return " ".join("(" + ", ".join(map(_cell, x)) + ")" for x in v)
        return ", ".join(_cell(x) for x in v)
    return "" if v is None else str(v)


def render(table: Table, fmt: str) -> str:
    if fmt == "json":
        return dump_json(table.to_json_obj())
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(table.columns)
        for r in table.rows:
            w.writerow([_cell(r.get(c)) for c in table.columns])
        return buf.getvalue()
    lines = [f"{k}: {_cell(v)}" for k, v in table.meta.items()]
    if lines:
        lines.append("")
    lines.append("| " + " | ".join(table.columns) + " |")
    lines.append("|" + "|".join("---" for _ in table.columns) + "|")
    for r in table.rows:
        lines.append("| " + " | ".join(_cell(r.get(c)).replace("|", "\\|") for c in table.columns) + " |")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# input parsing

_TOKEN = re.compile(r"([^\s=]+)=(\[[^\]]*\]|\S+)")


def parse_curve(text: str, p: int | None = None, seed: int = 0):
    """Returns (PlaneCurve, CyclicType or None).

    A type with no parameters gets a random member drawn from ``seed``.
    """
    import random

    from .family import PlaneCurve, draw_params, family_for, specialize
    from .poly import HomPoly
    from .strata import parse_type
    from .verify import family_prime

    pairs = _TOKEN.findall(text)
    leftover = _TOKEN.sub("", text).strip()
    if leftover or not pairs:
        raise UsageError(f"cannot parse curve spec {text!r}")
    kv = dict(pairs)
    if "poly" in kv:
        K = ff.field_for(p or 0) if p else None
        probe = HomPoly.parse(kv["poly"], ff.field_for(2))
        K = K or ff.field_for(family_prime(probe.d, 2))
        F = HomPoly.parse(kv["poly"], K)
        return PlaneCurve(F), None
    if "d" not in kv:
        raise UsageError("curve spec needs d=<degree>")
    d = int(kv.pop("d"))
    if d < 4:
        raise UsageError("degree must be at least 4")
    if "coeffs" in kv:
        try:
            entries = ast.literal_eval(kv.pop("coeffs"))
        except (ValueError, SyntaxError) as exc:
            raise UsageError(f"bad coeffs list: {exc}") from None
        K = ff.field_for(p or family_prime(d, 2))
        terms = {}
        for i, j, k, c in entries:
            terms[(i, j, k)] = (terms.get((i, j, k), 0) + c) % K.p
        return PlaneCurve(HomPoly.from_ints(d, terms, K)), None
    if "type" not in kv:
        raise UsageError("curve spec needs type=m,a,b, coeffs=[...] or poly=...")
    t = parse_type(d, kv.pop("type"))
    K = ff.field_for(p or family_prime(d, t.m))
    fam = family_for(t)
    if kv:
        params = {k: int(v) for k, v in kv.items()}
    else:
        params = {tuple(mo): v for mo, v in draw_params(fam, K, random.Random(seed)).items()}
    return specialize(fam, params, K), t


def parse_map(text: str, K):
    from .autgrp import ProjMatrix

    scalars = {f"xi{m}": ff.root_of_unity(K, int(m)) for m in re.findall(r"xi(\d+)", text)}
    return ProjMatrix.from_images(K, text, scalars)


def type_map(t, K):
    from .autgrp import ProjMatrix

    xi = ff.root_of_unity(K, t.m)
    return ProjMatrix.diag(K, 1, K.pow(xi, t.a), K.pow(xi, t.b))


# ---------------------------------------------------------------------------
# commands


def cmd_types(args) -> tuple[Table, int]:
    from .family import EquationFamily
    from .types import classify, table_unfiltered

    d = args.degree
    fams = table_unfiltered(d) if args.unfiltered else classify(d)
    rows = []
    for f in fams:
        eq = EquationFamily.from_type_family(f)
        rows.append(
            {
                "type": f.ctype.label,
                "m": f.m,
                "a": f.ctype.a,
                "b": f.ctype.b,
                "case": f.case_tag,
                "equation": eq.shorthand(),
                "support": [str(mo) for mo in f.sorted_monomials()],
                "flags": sorted(f.flags),
            }
        )
    cols = ["type", "equation"] + (["flags"] if args.unfiltered else [])
    if args.format != "md":
        cols = ["type", "m", "a", "b", "case", "equation", "support", "flags"]
    meta = {"degree": d, "rows": len(rows), "filtered": not args.unfiltered}
    return Table("types", cols, rows, meta), EXIT_OK


def cmd_verify(args) -> tuple[Table, int]:
    from . import verify

    checks, timings = verify.run(
        args.degree, seed=args.seed, trials=args.trials, exhaustive=args.exhaustive, budget=args.budget, jobs=args.jobs
    )
    rows = [c.as_row() for c in checks]
    failed = sum(not c.ok for c in checks)
    meta = {"degree": args.degree, "checks": len(rows), "failed": failed, "seconds": timings}
    table = Table("verify", ["check", "expected", "got", "ok", "note"], rows, meta)
    return table, EXIT_MISMATCH if failed else EXIT_OK


def cmd_smooth(args) -> tuple[Table, int]:
    from .poly import is_smooth, singular_points_exhaustive

    c, _ = parse_curve(" ".join(args.curve), args.field, args.seed)
    res = is_smooth(c.form, seed=args.seed)
    row = {
        "curve": str(c.form),
        "field": f"F_{c.field.p}",
        "smooth": res.smooth,
        "witness": res.witness.fmt() if res.witness is not None else None,
    }
    code = EXIT_OK
    if args.exhaustive:
        found = [pt.fmt() for pt in singular_points_exhaustive(c.form, 1)]
        found += [pt.fmt() for pt in singular_points_exhaustive(c.form, 2) if pt.minimal_degree() == 2]
        row["exhaustive_singular_points"] = found
        if res.smooth and found:
            code = EXIT_MISMATCH
    cols = list(row)
    return Table("smooth", cols, [row]), code


def _group_row(name, G):
    return {"group": name, "order": G.order, "element_orders": {str(k): v for k, v in G.order_histogram.items()}}


def cmd_aut(args) -> tuple[Table, int]:
    from .autgrp import exhaustive_aut, monomial_stabilizer

    c, _ = parse_curve(" ".join(args.curve), args.field, args.seed)
    rows = [_group_row("monomial stabilizer", monomial_stabilizer(c))]
    code = EXIT_OK
    if args.exhaustive:
        G = exhaustive_aut(c, args.extension, budget=args.budget, jobs=args.jobs)
        rows.append(_group_row(f"exhaustive over F_{c.field.p}^{args.extension}", G))
        if G.order % rows[0]["order"]:
            code = EXIT_MISMATCH
    meta = {"curve": str(c.form), "field": f"F_{c.field.p}"}
    return Table("aut", ["group", "order", "element_orders"], rows, meta), code


def cmd_closure(args) -> tuple[Table, int]:
    from .autgrp import closure, verify_presentation

    if not args.field:
        raise UsageError("closure needs --field")
    K = ff.field_for(args.field)
    gens = {}
    for spec in args.generators:
        name, _, m = spec.partition("=") if re.match(r"^\w+=\[", spec) else ("", "", spec)
        gens[name or f"g{len(gens) + 1}"] = parse_map(m, K)
    G = closure(list(gens.values()), bound=args.bound)
    row = _group_row("closure", G)
    code = EXIT_OK
    if args.relation:
        ok = verify_presentation(gens, args.relation, args.order or G.order)
        row["presentation_holds"] = ok
        code = EXIT_OK if ok else EXIT_MISMATCH
    elif args.order is not None and args.order != G.order:
        code = EXIT_MISMATCH
    meta = {"field": f"F_{K.p}", "generators": sorted(gens)}
    return Table("closure", list(row), [row], meta), code


def cmd_quotient(args) -> tuple[Table, int]:
    from . import quotient

    c, t = parse_curve(" ".join(args.curve), args.field, args.seed)
    K = c.field
    if args.aut:
        M = parse_map(args.aut, K)
    elif t is not None:
        M = type_map(t, K)
    else:
        raise UsageError("--aut is required for curves not given by a type")
    pts = quotient.fixed_points(c, M)
    bd = quotient.branch_data(c, M, pts)
    g0 = quotient.hurwitz_quotient_genus(quotient.genus(c.d), bd)
    rows = [{"point": b.point.fmt(), "field_degree": b.point.field.e, "stabilizer": b.stabilizer_order} for b in pts]
    meta = {
        "curve": str(c.form),
        "field": f"F_{K.p}",
        "group_order": bd.group_order,
        "orbits": [list(o) for o in bd.orbits],
        "profile": list(bd.profile),
        "genus": quotient.genus(c.d),
        "quotient_genus": g0,
    }
    return Table("quotient", ["point", "field_degree", "stabilizer"], rows, meta), EXIT_OK


def cmd_strata(args) -> tuple[Table, int]:
    from .strata import all_strata, equation_components

    reports = [equation_components(args.degree, args.order)] if args.order else all_strata(args.degree)
    rows = [
        {
            "m": r.m,
            "count": r.count,
            "types": r.labels(),
            "es_irreducible_candidate": r.es_irreducible_candidate,
            "note": "; ".join(r.annotations),
        }
        for r in reports
    ]
    meta = {"degree": args.degree, "meaning": "raw type counts, a lower bound on equation components"}
    return Table("strata", ["m", "count", "types", "es_irreducible_candidate", "note"], rows, meta), EXIT_OK


# ---------------------------------------------------------------------------


def _add_common(p, degree=False):
    if degree:
        p.add_argument("degree_pos", nargs="?", type=int, metavar="D")
        p.add_argument("--degree", type=int)
    p.add_argument("--format", choices=("md", "csv", "json"), default="md")
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--field", type=int, help="prime p to work over")


_RAW = argparse.RawDescriptionHelpFormatter
GRAMMAR = "curve syntax:" + __doc__.split("::", 1)[1].replace("``", "")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planeaut",
        description="Cyclic automorphisms of smooth plane curves over finite fields.",
        epilog=GRAMMAR,
        formatter_class=_RAW,
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("types", help="table of cyclic types for a degree")
    _add_common(p, degree=True)
    p.add_argument("--unfiltered", action="store_true", help="keep reducible and degenerate families")
    p.set_defaults(func=cmd_types)

    p = sub.add_parser("verify", help="run all checks for a degree")
    _add_common(p, degree=True)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--exhaustive", action="store_true", help="also run the slow exhaustive oracles")
    p.add_argument("--budget", type=int, default=10**9, help="max candidate frames for exhaustive search")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("smooth", help="decide smoothness of a curve", epilog=GRAMMAR, formatter_class=_RAW)
    _add_common(p)
    p.add_argument("curve", nargs="+")
    p.add_argument("--exhaustive", action="store_true", help="cross-check over F_p and F_p^2")
    p.set_defaults(func=cmd_smooth)

    p = sub.add_parser("aut", help="automorphisms of a curve", epilog=GRAMMAR, formatter_class=_RAW)
    _add_common(p)
    p.add_argument("curve", nargs="+")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--extension", type=int, default=1, help="search PGL_3(F_p^e)")
    p.add_argument("--budget", type=int, default=10**8)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("closure", help="group generated by projective maps", epilog=GRAMMAR, formatter_class=_RAW)
    _add_common(p)
    p.add_argument("generators", nargs="+", help="maps such as s=[X;xi13*Y;xi13^10*Z]")
    p.add_argument("--relation", action="append", default=[], help="word relation, e.g. 's t = t s^3'")
    p.add_argument("--order", type=int, help="expected order")
    p.add_argument("--bound", type=int, default=100000)
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("quotient", help="fixed points and quotient genus", epilog=GRAMMAR, formatter_class=_RAW)
    _add_common(p)
    p.add_argument("curve", nargs="+")
    p.add_argument("--aut", help="automorphism; defaults to the generator of the curve's type")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("strata", help="equation components per order")
    _add_common(p, degree=True)
    p.add_argument("order", nargs="?", type=int)
    p.set_defaults(func=cmd_strata)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "degree_pos"):
        if args.degree is None:
            args.degree = args.degree_pos
        elif args.degree_pos is not None and args.degree_pos != args.degree:
            parser.error("conflicting degrees")
        if args.degree is None:
            parser.error("a degree is required")
        if args.degree < 4:
            parser.error("degree must be at least 4")
    try:
        table, code = args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"planeaut: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render(table, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
