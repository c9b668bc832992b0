"""Command-line front end.  Exit codes: 0 success, 1 failed check or mismatch, 2 usage or I/O error."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog, gq, verify
from .errors import ParseError, SlimhexError, ValidationError
from .geometry import IncidenceGeometry, quads, uniform_line_count
from .repgroup import default_pair, good_subset_search, group_report, universal_module

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _load_target(target: str, budget_secs: float | None = None) -> IncidenceGeometry:
    if target in catalog.CATALOG:
        kwargs = {"budget_secs": budget_secs} if catalog.CATALOG[target].optional and budget_secs else {}
        g = catalog.build(target, **kwargs)
        if g is None:
            raise UsageError(f"{target} could not be constructed within the budget")
        return g
    path = Path(target)
    if not path.exists():
        raise UsageError(f"unknown catalog key or missing file: {target!r} (keys: {', '.join(catalog.CATALOG)})")
    try:
        g = catalog.load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {target}: {exc}") from exc
    if g.name is None:
        g = IncidenceGeometry(g.num_points, g.lines, path.stem)
    return g


def _emit(args, data, human) -> None:
    if args.json:
        print(_dumps(data))
    else:
        for line in human(data):
            print(line)


def _kv_lines(data):
    for k in sorted(data):
        yield f"{k:>20}: {data[k]}"


# -- subcommands ------------------------------------------------------------------------------


def cmd_generate(args) -> int:
    key = args.key
    if key not in catalog.CATALOG:
        raise UsageError(f"unknown catalog key {key!r}; choose from {', '.join(catalog.CATALOG)}")
    g = _load_target(key, args.budget_secs)
    if args.output:
        try:
            catalog.save(g, args.output)
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc}") from exc
    else:
        print(catalog.to_json(g))
    return OK


def cmd_params(args) -> int:
    g = _load_target(args.target)
    row = args.row
    if row is None and args.target in catalog.CATALOG:
        expected = catalog.expected_for(args.target)
    elif row is not None:
        if row not in catalog.TABLE and row not in catalog.CATALOG:
            raise UsageError(f"unknown table row {row!r}; choose from {', '.join(catalog.TABLE)}")
        expected = catalog.expected_for(row)
    else:
        _emit(args, catalog.measure_params(g), _kv_lines)
        return OK
    report = catalog.verify_params(g, expected)

    def human(r):
        for k, f in r["fields"].items():
            mark = "pass" if f["pass"] else "FAIL"
            yield f"{k:>10}  {mark}  measured={f['measured']}  expected={f['expected']}"

    _emit(args, report, human)
    return OK if report["ok"] else FAILED


def cmd_repdim(args) -> int:
    g = _load_target(args.target)
    rs = universal_module(g)
    data = {"dim_v": rs.dim_v, "npdim": rs.npdim if g.diameter == 3 else 0}
    _emit(args, data, _kv_lines)
    return OK


def cmd_group(args) -> int:
    g = _load_target(args.target)
    if g.diameter not in (2, 3):
        raise UsageError("group needs a generalized quadrangle or a near hexagon")
    report = group_report(g)
    _emit(args, report, _kv_lines)
    return FAILED if "obstruction" in report else OK


def cmd_good_subset(args) -> int:
    g = _load_target(args.target)
    if g.diameter != 3:
        raise UsageError("good-subset needs a near hexagon")
    if (args.a is None) != (args.b is None):
        raise UsageError("--a and --b go together")
    a, b = (args.a, args.b) if args.a is not None else default_pair(g)
    if not (0 <= a < g.num_points and 0 <= b < g.num_points):
        raise UsageError("point out of range")
    w = good_subset_search(universal_module(g), a, b)
    data = {**w.to_json_dict(), "size": w.size, "lower_bound_log2": w.lower_bound_log2}
    _emit(args, data, _kv_lines)
    return OK


def cmd_verify(args) -> int:
    ids = args.check or None
    for i in ids or ():
        if i not in verify.CHECK_IDS:
            raise UsageError(f"unknown check {i!r}")
    if args.all == (args.target is not None):
        raise UsageError("give a target or --all")
    if args.all:
        keys = list(catalog.CATALOG)
    else:
        keys = [args.target]
    certs = []
    for key in keys:
        try:
            g = _load_target(key, args.budget_secs)
        except UsageError:
            if args.all and catalog.CATALOG[key].optional:
                certs += verify.skipped_suite(key, f"{key.removesuffix('_glued')} not constructed", ids)
                continue
            raise
        certs += verify.run_suite(g, ids)
    report = verify.report_json(certs, args.timings)
    if args.json:
        print(_dumps(report))
    else:
        for c in certs:
            extra = f" ({c.millis} ms)" if args.timings else ""
            note = ""
            if c.status.kind == verify.SKIPPED:
                note = f"  {c.status.witness.get('reason', '')}"
            elif c.status.kind == verify.FAIL:
                note = f"  {_dumps(c.status.witness)}"
            print(f"{c.geometry:>14}  {c.check:<32} {c.status.kind.upper():<7}{extra}{note}")
        s = report["summary"]
        print(f"pass={s['pass']} fail={s['fail']} skipped={s['skipped']}")
    return FAILED if report["summary"]["fail"] else OK


def cmd_arcs(args) -> int:
    g = _load_target(args.target)
    try:
        m = gq.model_for(g)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.k is None:
        data = {"max_arc_size": gq.max_arc_size(m), "ovoids": [list(o) for o in gq.ovoids(m)]}
    else:
        if args.k < 0:
            raise UsageError("--k must be non-negative")
        found = gq.arcs(m, args.k)
        data = {"k": args.k, "count": len(found), "complete": sum(a.complete for a in found),
                "arcs": [list(a.points) for a in found]}
    _emit(args, data, lambda d: (f"{k:>14}: {d[k]}" for k in sorted(d) if k != "arcs"))
    return OK


def cmd_quads(args) -> int:
    g = _load_target(args.target)
    if g.diameter != 3 or uniform_line_count(g) is None:
        raise UsageError("quads needs a near hexagon")
    qs = quads(g)
    summary = {}
    for q in qs:
        key = f"({2},{q.t2}) {'big' if q.big else 'not big'}"
        summary[key] = summary.get(key, 0) + 1
    data = {"count": len(qs), "types": summary}
    if args.list:
        data["quads"] = [{"points": list(q.points), "t2": q.t2, "big": q.big} for q in qs]
    _emit(args, data, lambda d: [f"{len(qs)} quads"] + [f"  {k}: {v}" for k, v in sorted(d["types"].items())])
    return OK


# -- parser ---------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="slimhex", description="Slim near hexagons, quadrangles and their F2 representations.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, target=True, **kw):
        sp = sub.add_parser(name, **kw)
        if target:
            sp.add_argument("target", help="catalog key or geometry JSON file")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(fn=fn)
        return sp

    sp = add("generate", cmd_generate, target=False, help="write a catalog geometry as JSON")
    sp.add_argument("key")
    sp.add_argument("-o", "--output")
    sp.add_argument("--budget-secs", type=float, default=None)

    sp = add("params", cmd_params, help="measure table parameters and compare")
    sp.add_argument("--row", help="table row (e.g. iii) to compare an ingested file against")

    add("repdim", cmd_repdim, help="dim V(S) and NPdim")
    add("group", cmd_group, help="representation group report")

    sp = add("good-subset", cmd_good_subset, help="largest good subset for a distance-3 pair")
    sp.add_argument("--a", type=int)
    sp.add_argument("--b", type=int)

    sp = sub.add_parser("verify", help="run the verification suite")
    sp.add_argument("target", nargs="?")
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--check", action="append", help="restrict to a check id (repeatable)")
    sp.add_argument("--budget-secs", type=float, default=120.0, help="time budget for the glued (vi) search")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--timings", action="store_true", help="include per-check milliseconds")
    sp.set_defaults(fn=cmd_verify)

    sp = add("arcs", cmd_arcs, help="arcs and ovoids of a slim GQ")
    sp.add_argument("--k", type=int)

    sp = add("quads", cmd_quads, help="quads of a near hexagon")
    sp.add_argument("--list", action="store_true")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"slimhex: {exc}", file=sys.stderr)
        return USAGE
    except (ParseError, ValidationError) as exc:
        print(f"slimhex: {exc}", file=sys.stderr)
        return USAGE
    except SlimhexError as exc:
        print(f"slimhex: {type(exc).__name__}: {exc}", file=sys.stderr)
        return FAILED


if __name__ == "__main__":
    sys.exit(main())
