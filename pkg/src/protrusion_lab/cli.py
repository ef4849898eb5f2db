"""Command-line front end.

Exit codes: 0 success, 1 verification failure (JSON report on stdout),
2 usage error or malformed input.
"""
from __future__ import annotations

import argparse
import itertools
import json
import os
import sys

from . import counting, ds, equivalence, graph, metrics, oracle, planar, synthesis
from .parallel import parallel_map

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _report(claim: str, key: str, ok: bool, details: dict) -> int:
    print(_dump({"claim": claim, "paper_ref": key, "status": "pass" if ok else "fail",
                 "details": details}))
    return EXIT_OK if ok else EXIT_FAIL


def _load_json(path_or_text: str):
    try:
        if os.path.exists(path_or_text):
            with open(path_or_text) as fh:
                return json.load(fh)
        return json.loads(path_or_text)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON from {path_or_text!r}: {exc}") from None


def _load_graph(path: str) -> graph.Graph:
    try:
        return graph.from_dict(_load_json(path))
    except graph.GraphError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _need_boundary(g: graph.Graph, path: str) -> graph.BoundariedGraph:
    if not isinstance(g, graph.BoundariedGraph):
        raise UsageError(f"{path}: a boundary (t >= 1) is required")
    return g


# -- subcommands --------------------------------------------------------------

def cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    solver = {"is": oracle.max_independent_set, "vc": oracle.min_vertex_cover,
              "ds": oracle.min_dominating_set}[args.problem]
    print(_dump({"problem": args.problem, "n": g.n, "value": solver(g)}))
    return EXIT_OK


def cmd_boundary_fn(args) -> int:
    g = _need_boundary(_load_graph(args.graph), args.graph)
    f = oracle.boundary_function(g)
    if args.normalized:
        f = oracle.normalize(f)
    print(f.to_json())
    return EXIT_OK


def cmd_equivalent(args) -> int:
    g = _need_boundary(_load_graph(args.g), args.g)
    h = _need_boundary(_load_graph(args.h), args.h)
    if g.t != h.t:
        raise UsageError(f"boundary sizes differ: {g.t} vs {h.t}")
    # key order fixed: "equivalent" first
    print(json.dumps(equivalence.equivalent(g, h).to_dict(), separators=(",", ":")))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.kind == "representative":
        funcs = equivalence.enumerate_representative_functions(args.t)
    else:
        funcs = equivalence.enumerate_monotone_functions(args.t)
    equivalence.dump_function_lines(funcs, sys.stdout)
    return EXIT_OK


def cmd_dedekind(args) -> int:
    def progress(done, total):
        print(f"dedekind: {done}/{total} blocks", file=sys.stderr)

    try:
        value = equivalence.dedekind(args.t, limit=args.limit,
                                     progress=progress if args.t >= 5 else None)
    except oracle.CapacityError as exc:
        print(f"dedekind: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(value)
    return EXIT_OK


def _parse_function(t: int, raw: str) -> tuple:
    data = _load_json(raw)
    if isinstance(data, dict):
        if int(data.get("t", t)) != t:
            raise UsageError("function t does not match --t")
        data = data.get("values")
    if not isinstance(data, list) or len(data) != 1 << t:
        raise UsageError(f"function must list {1 << t} values")
    return tuple(int(x) for x in data)


def cmd_synthesize(args) -> int:
    vals = _parse_function(args.t, args.function)
    try:
        f = equivalence.RepresentativeFunction(args.t, vals)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(graph.to_json(synthesis.realize_function(f)))
    return EXIT_OK


def _normalized_of(item) -> tuple:
    t, vals = item
    g = synthesis.realize_function(equivalence.RepresentativeFunction(t, vals))
    return oracle.normalize(oracle.boundary_function(g)).values


def cmd_verify_bijection(args) -> int:
    funcs = equivalence.enumerate_representative_functions(args.t)
    items = [(f.t, f.values) for f in funcs]
    normals = parallel_map(_normalized_of, items)
    recovered = sum(1 for (t, vals), nv in zip(items, normals) if nv == vals)
    distinct = len(set(normals))
    ok = recovered == len(items) and distinct == len(items)
    return _report("every representative function is realized and distinct functions give "
                   "nonequivalent graphs", "realization-bijection", ok,
                   {"t": args.t, "functions": len(items), "recovered": recovered,
                    "distinct_classes": distinct})


def gadget_check_details() -> tuple[bool, dict]:
    gad = planar.crossover_gadget()
    table = planar.crossover_table(gad.graph, gad.terminals)
    expected = planar.expected_crossover_table()
    rows = [[table.get((i, j)) for i in range(3)] for j in range(3)]
    clause = {}
    clause_ok = True
    for k in range(1, 6):
        c = planar.clause_gadget(k)
        val = oracle.max_independent_set(c.graph)
        clause[str(k)] = val
        clause_ok &= val == k + 2
    ok = table == expected and clause_ok and gad.graph.n == 22 and metrics.is_planar(gad.graph)
    return ok, {"crossover_rows": rows, "clause_optima": clause, "gadget_vertices": gad.graph.n}


def cmd_gadget_check(args) -> int:
    try:
        ok, details = gadget_check_details()
    except planar.GadgetError as exc:
        return _report("crossover and clause gadget optima", "gadget-tables", False,
                       {"error": str(exc)})
    return _report("crossover and clause gadget optima", "gadget-tables", ok, details)


def _function_tag(f) -> str:
    return "f_" + "".join(str(x) for x in f.outputs)


def cmd_build_family(args) -> int:
    members = planar.planar_family_members(args.t)
    os.makedirs(args.out, exist_ok=True)
    entries = []
    ok = True
    for m in members:
        tag = _function_tag(m.function)
        base = os.path.join(args.out, tag)
        with open(base + ".json", "w") as fh:
            fh.write(graph.to_json(m.graph) + "\n")
        with open(base + ".dot", "w") as fh:
            fh.write(graph.to_dot(m.graph, tag))
        with open(base + ".meta.json", "w") as fh:
            fh.write(m.drawing.to_json() + "\n")
        planar_ok = metrics.is_planar(m.graph)
        ok &= planar_ok
        entries.append({"function": list(m.function.outputs), "file": tag + ".json",
                        "n": m.graph.n, "crossings": m.crossings, "planar": planar_ok})
    expected = equivalence.dedekind(args.t) - 2
    ok &= len(members) == expected
    return _report("one planar graph per non-constant monotone function", "planar-family", ok,
                   {"t": args.t, "graphs": len(members), "expected": expected, "members": entries})


def _ds_pair(item):
    t, i, j = item
    members = planar.planar_family_members(t)
    sep = ds.ds_separation(members, i, j)
    return [i, j, sep.s1, sep.s2, sep.diff1, sep.diff2]


def cmd_ds_family(args) -> int:
    fam = ds.build_ds_family(args.t)
    planar_flags = [metrics.is_planar(g) for g in fam]
    pairs = [(args.t, i, j) for i, j in itertools.combinations(range(len(fam)), 2)]
    seps = parallel_map(_ds_pair, pairs)
    separated = all(s[4] != s[5] for s in seps)
    expected = equivalence.dedekind(args.t) - 2
    ok = all(planar_flags) and separated and len(fam) == expected
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        for k, g in enumerate(fam):
            with open(os.path.join(args.out, f"ds_{k}.json"), "w") as fh:
                fh.write(graph.to_json(g) + "\n")
    return _report("triangle-transformed family is planar and pairwise separated for "
                   "Dominating Set", "ds-family", ok,
                   {"t": args.t, "graphs": len(fam), "expected": expected,
                    "all_planar": all(planar_flags),
                    "pairs": [dict(zip(("i", "j", "s1", "s2", "diff1", "diff2"), s)) for s in seps]})


def cmd_clean(args) -> int:
    g = _load_graph(args.graph)
    try:
        d = planar.Drawing.from_dict(_load_json(args.meta))
        sched = planar.generate_cleaning_schedule(g, d)
    except planar.LayoutError as exc:
        raise UsageError(f"metadata mismatch: {exc}") from None
    if args.schedule_out:
        with open(args.schedule_out, "w") as fh:
            fh.write(sched.to_json() + "\n")
    out = metrics.simulate_mixed_search(g, sched)
    print(_dump(out.to_dict()))
    return EXIT_OK if out.cleaned else EXIT_FAIL


def cmd_critical_size(args) -> int:
    counts = counting.load_planar_counts(args.counts) if args.counts else None
    try:
        value = counting.critical_size_bound(args.t, args.model, counts=counts,
                                             ordered=args.ordered)
    except oracle.CapacityError as exc:
        raise UsageError(str(exc)) from None
    print(value)
    return EXIT_OK


def cmd_export(args) -> int:
    if args.kind == "graph":
        if not args.graph:
            raise UsageError("--graph is required for kind 'graph'")
        g = _load_graph(args.graph)
    elif args.kind == "crossover":
        g = planar.crossover_gadget().graph
    elif args.kind == "clause":
        g = planar.clause_gadget(args.k).graph
    elif args.kind == "indicator":
        g = graph.indicator_graph(args.t, args.subset)
    else:
        clauses = _load_json(args.cnf) if args.cnf else None
        if not isinstance(clauses, list):
            raise UsageError("--cnf must be a JSON list of clauses")
        cnf = equivalence.MonotoneCNF(args.t, tuple(tuple(c) for c in clauses))
        g, d = planar.build_G_phi(args.t, cnf)
        if args.planarize and d.crossings:
            g = planar.planarize_G_phi(g, d)
    text = graph.to_dot(g) if args.format == "dot" else graph.to_json(g) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="protrusion-lab",
                                description="Boundaried-graph equivalence toolkit for "
                                            "Independent Set and Dominating Set.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="exact optimum of a graph")
    s.add_argument("--graph", required=True)
    s.add_argument("--problem", choices=("is", "vc", "ds"), default="is")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("boundary-fn", help="boundary function of a boundaried graph")
    s.add_argument("--graph", required=True)
    s.add_argument("--normalized", action="store_true")
    s.set_defaults(func=cmd_boundary_fn)

    s = sub.add_parser("equivalent", help="test two boundaried graphs for equivalence")
    s.add_argument("--g", required=True)
    s.add_argument("--h", required=True)
    s.set_defaults(func=cmd_equivalent)

    s = sub.add_parser("enumerate-functions", help="list representative or monotone functions")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--kind", choices=("representative", "monotone"), default="representative")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("dedekind", help="count monotone Boolean functions")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--limit", type=int, default=None,
                   help="abort once more than this many functions are counted")
    s.set_defaults(func=cmd_dedekind)

    s = sub.add_parser("synthesize", help="graph realizing a representative function")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--function", required=True, help="JSON list of values, object, or file")
    s.set_defaults(func=cmd_synthesize)

    s = sub.add_parser("verify-bijection", help="realize and verify every representative function")
    s.add_argument("--t", type=int, required=True)
    s.set_defaults(func=cmd_verify_bijection)

    s = sub.add_parser("gadget-check", help="validate crossover and clause gadget optima")
    s.set_defaults(func=cmd_gadget_check)

    s = sub.add_parser("build-family", help="write the planar family as JSON and DOT")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_build_family)

    s = sub.add_parser("ds-family", help="verify the Dominating Set family")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_ds_family)

    s = sub.add_parser("clean", help="run the generated cleaning schedule on a family graph")
    s.add_argument("--graph", required=True)
    s.add_argument("--meta", required=True)
    s.add_argument("--schedule-out", default=None)
    s.set_defaults(func=cmd_clean)

    s = sub.add_parser("critical-size", help="critical-size lower bound")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--model", choices=counting.MODELS, default="exact")
    s.add_argument("--ordered", action="store_true", help="count ordered boundary labelings")
    s.add_argument("--counts", default=None, help="planar_counts.json to use instead of the bundled one")
    s.set_defaults(func=cmd_critical_size)

    s = sub.add_parser("export", help="export a graph or a named construction")
    s.add_argument("--kind", choices=("graph", "crossover", "clause", "indicator", "phi"),
                   default="graph")
    s.add_argument("--graph", default=None)
    s.add_argument("--format", choices=("json", "dot"), default="json")
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--t", type=int, default=1)
    s.add_argument("--subset", type=int, default=0)
    s.add_argument("--cnf", default=None, help='JSON list of clauses, e.g. "[[1,2],[3]]"')
    s.add_argument("--planarize", action="store_true")
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_export)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ValueError, graph.GraphError, oracle.CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
