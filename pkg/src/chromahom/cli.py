"""Command-line front end: ``chromahom <command> ...``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import cells, complex as cx, harness
from .graphs import FAMILY_HELP, GraphError, family, parse_edge_list, stats
from .homology import AbelianGroup


# ---------------------------------------------------------------------------
# input

def load_source(src: str):
    """(graph, mesh or None) from a family descriptor, edge-list file or quad-mesh file."""
    if os.path.exists(src):
        with open(src) as fh:
            text = fh.read()
        head = next((ln.split("#")[0].split() for ln in text.splitlines() if ln.split("#")[0].strip()), [])
        if len(head) == 3:
            mesh = cells.parse_quad_mesh(text)
            return mesh.graph(), mesh
        g = parse_edge_list(text)
        return g, None
    return family(src), None


def _range(text: str | None):
    if not text:
        return None
    lo, _, hi = text.partition(":")
    return int(lo), int(hi or lo)


# ---------------------------------------------------------------------------
# output

def _group_fields(g: AbelianGroup) -> dict:
    return {"group": str(g), "primary": g.primary_str(), **g.to_json()}


def emit(args, payload: dict | list, rows: list[dict] | None = None, text: str | None = None) -> None:
    fmt = args.format
    if fmt == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    elif fmt == "csv":
        rows = rows if rows is not None else [payload]
        buf = io.StringIO()
        keys: list[str] = []
        for r in rows:
            keys += [k for k in r if k not in keys]
        w = csv.DictWriter(buf, fieldnames=keys)
        w.writeheader()
        for r in rows:
            w.writerow({k: (json.dumps(v) if isinstance(v, (dict, list)) else v) for k, v in r.items()})
        print(buf.getvalue(), end="")
    else:
        print(text if text is not None else json.dumps(payload, indent=2, ensure_ascii=False))


def _table_text(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    line = lambda r: "  ".join(str(x).ljust(w) for x, w in zip(r, widths)).rstrip()
    return "\n".join([line(header), line(["-" * w for w in widths])] + [line(r) for r in rows])


# ---------------------------------------------------------------------------
# commands

def cmd_cohomology(args) -> int:
    g, _ = load_source(args.graph)
    ranks = harness.guard_cohomology(g, args.m, args.i, args.j, args.variant, args.max_cells)
    if args.convention == "homology":
        grp = cx.homology(g, args.m, args.i, args.j, args.variant)
    else:
        grp = cx.cohomology(g, args.m, args.i, args.j, args.variant)
    out = {"graph": str(g), "v": g.v, "E": g.E, "m": args.m, "i": args.i, "j": args.j,
           "variant": args.variant, "convention": args.convention, **_group_fields(grp),
           "chain_ranks": {str(k): v for k, v in ranks.items()}}
    label = "H" if args.convention == "cohomology" else "H_"
    lines = [f"{label}^{{{args.i},{args.j}}}_{{A_{args.m}}}({g}) [{args.variant}] = {grp}",
             f"  primary form: {grp.primary_str()}",
             "  chain ranks: " + ", ".join(f"C^{k}={v}" for k, v in ranks.items())]
    if args.variant == "dichromatic":
        cj = g.v * (args.m - 1) - args.j
        out["chromatic_j"] = cj
        lines.append(f"  chromatic grading: j' = v(m-1) - j = {cj} (raw dichromatic grading {args.j})")
    emit(args, out, text="\n".join(lines))
    return 0


def cmd_scan(args) -> int:
    g, _ = load_source(args.graph)
    r = _range(args.j)
    js = range(r[0], r[1] + 1) if r else None
    rep = harness.scan(g, args.m, args.i, js, args.variant, args.max_cells)
    payload = rep.to_json()
    rows = [{"graph": rep.graph, "m": rep.m, "i": rep.i, "j": j,
             "torsion": "skipped" if t is None else str(t)} for j, t in rep.torsion.items()]
    lines = [f"{rep.graph}: torsion of H^{{{rep.i},j}}_{{A_{rep.m}}} [{rep.variant}]"]
    lines += [f"  j={r_['j']:>3}  {r_['torsion']}" for r_ in rows]
    lines.append(f"  width = {rep.width}" + ("" if rep.complete else f" (incomplete, skipped j = {rep.skipped})"))
    emit(args, payload, rows, "\n".join(lines))
    return 0


def cmd_table(args) -> int:
    r = _range(args.range)
    rep = harness.run_table(args.table, range(r[0], r[1] + 1) if r else None, args.max_cells)
    rows = []
    for row in rep.rows:
        for c in row.cells:
            rows.append({"table": rep.table, "param": row.param, "graph": row.graph, "column": c.label,
                         "j": c.j, "kind": c.kind,
                         "computed": "skipped" if c.computed is None else str(c.computed),
                         "expected": "" if c.expected is None else str(c.expected), "status": c.status})
        if row.width_expected is not None:
            rows.append({"table": rep.table, "param": row.param, "graph": row.graph, "column": "width",
                         "j": "", "kind": "width", "computed": row.width if row.width_complete else "incomplete",
                         "expected": row.width_expected,
                         "status": "skipped" if not row.width_complete else
                         ("match" if row.width == row.width_expected else "differs")})
    text = _table_text(["param", "graph", "column", "j", "computed", "expected", "status"],
                       [[x["param"], x["graph"], x["column"], x["j"], x["computed"], x["expected"], x["status"]]
                        for x in rows])
    emit(args, {"table": rep.table, "ok": rep.ok, "cells": rows}, rows, text)
    return 0


def cmd_verify(args) -> int:
    recs = harness.verify(args.suite, args.seed)
    bad = [r for r in recs if not r.equal]
    rows = [r.to_json() for r in recs]
    text = "\n".join([f"MISMATCH {r.suite} {r.graph} {r.params}: brute {r.brute} vs {r.closed}" for r in bad] +
                     [f"{args.suite}: {len(recs) - len(bad)}/{len(recs)} records equal"])
    emit(args, {"suite": args.suite, "seed": args.seed, "records": len(recs), "mismatches": len(bad),
                "details": rows if args.format == "json" else []}, rows, text)
    return 1 if bad else 0


def cmd_conjecture(args) -> int:
    r = _range(args.range)
    rep = harness.conjecture(args.id, *(r or (None, None)), cap=args.max_cells)
    rows = [dict(x.__dict__, conjecture=rep.conjecture) for x in rep.instances]
    text = _table_text(["param", "graph", "computed", "expected", "status"],
                       [[x.param, x.graph, x.computed, x.expected, x.status] for x in rep.instances])
    text = f"{rep.conjecture}: {rep.statement}\n{text}\nconfirmed on scanned range: {rep.confirmed}"
    emit(args, rep.to_json(), rows, text)
    return 0


def cmd_stats(args) -> int:
    g, _ = load_source(args.graph)
    s = stats(g).__dict__
    s = {k: (None if v == float("inf") else v) for k, v in s.items()}
    payload = {"graph": str(g), **s}
    emit(args, payload, text="\n".join(f"{k:>8} {v}" for k, v in payload.items()))
    return 0


def cmd_cell(args) -> int:
    g, mesh = load_source(args.graph)
    if mesh is not None and args.variant == "4-only":
        p = mesh.presentation()
    else:
        p = cells.presentation(g, cells.canonical_variant(args.variant))
    a, b = cells.h1(p), cells.h2(p)
    payload = {"graph": str(g), "variant": p.variant, "generators": p.ngens, "cells": p.nrows,
               "h1": _group_fields(a), "h2_rank": b}
    emit(args, payload, [{"graph": str(g), "variant": p.variant, "h1": str(a), "h2_rank": b}],
         f"{g} [{p.variant}]: H_1 = {a} (primary {a.primary_str()}), rank H_2 = {b}")
    return 0


def cmd_families(args) -> int:
    rows = [{"descriptor": k, "description": v} for k, v in FAMILY_HELP.items()]
    emit(args, rows, rows, "\n".join(f"{k:<10} {v}" for k, v in FAMILY_HELP.items()))
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--max-cells", type=int, default=None,
                        help=f"size guard (default {harness.DEFAULT_MAX_CELLS:,}, env {harness.ENV_MAX_CELLS})")

    graded = argparse.ArgumentParser(add_help=False)
    graded.add_argument("--m", type=int, default=3)
    graded.add_argument("--i", type=int, default=1)
    graded.add_argument("--variant", choices=cx.VARIANTS, default="chromatic")

    p = argparse.ArgumentParser(prog="chromahom", description="Chromatic graph cohomology over Z[x]/(x^m).")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("cohomology", parents=[common, graded], help="one group H^{i,j}")
    c.add_argument("graph", help="family descriptor, edge-list file or quad-mesh file")
    c.add_argument("--j", type=int, required=True)
    c.add_argument("--convention", choices=("cohomology", "homology"), default="cohomology")
    c.set_defaults(func=cmd_cohomology)

    c = sub.add_parser("scan", parents=[common, graded], help="torsion over a range of gradings and the width")
    c.add_argument("graph")
    c.add_argument("--j", help="grading range lo:hi (default: every nonempty grading)")
    c.set_defaults(func=cmd_scan)

    c = sub.add_parser("table", parents=[common], help="recompute a reference table")
    c.add_argument("table", choices=harness.TABLE_IDS)
    c.add_argument("--range", help="parameter range lo:hi")
    c.set_defaults(func=cmd_table)

    c = sub.add_parser("verify", parents=[common], help="brute force vs closed forms and property suites")
    c.add_argument("suite", choices=sorted(harness.SUITES) + ["properties", "all"])
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("conjecture", parents=[common], help="scan a conjectured formula")
    c.add_argument("id", choices=list(harness.CONJECTURES))
    c.add_argument("--range", help="parameter range lo:hi")
    c.set_defaults(func=cmd_conjecture)

    c = sub.add_parser("stats", parents=[common], help="graph statistics")
    c.add_argument("graph")
    c.set_defaults(func=cmd_stats)

    c = sub.add_parser("cell", parents=[common], help="homology of a triangle/square cell complex")
    c.add_argument("graph")
    c.add_argument("--variant", default="Δ4", help=f"one of {', '.join(cells.VARIANTS)} (ascii: D4, D4', D)")
    c.set_defaults(func=cmd_cell)

    c = sub.add_parser("families", parents=[common], help="list family descriptors")
    c.set_defaults(func=cmd_families)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except harness.TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (GraphError, cells.MeshError, cells.UnknownCellVariant, cx.UnknownVariant, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
