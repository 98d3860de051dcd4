"""Command line entry point: ``nestchroma {solve,generate,enumerate,verify}``."""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import sys
import time

from . import constructions as C
from .enumeration import (
    GraphClassFilter, MAX_ORDER, classify_triples, complement_conjecture_scan,
    count_by_enumeration, count_by_sequences, duplicate_free_colour_nested_bipartite,
    expected_pairs, generate_graphs, planar_sweep,
)
from .graph import Graph, GraphError, dedup
from .io import FormatError, GraphDocument, parse_edge_list, parse_graph6, parse_graph_text, write_edge_list, write_graph6
from .nested_coloring import (
    DEFAULT_BRUTE_FORCE_CAP, brute_force_nested_chromatic, chromatic_number_exact,
    first_bad_class, nested_chromatic_number,
)
from .poset import hasse_dot, weak_duplicate_poset

EXIT_PARSE = 2
EXIT_ORACLE = 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load(path: str, fmt: str) -> list[GraphDocument]:
    text = _read(path)
    if fmt == "edge-list":
        return [parse_edge_list(text)]
    if fmt == "graph6":
        return [GraphDocument("graph6", parse_graph6(ln), None) for ln in text.split() if ln]
    return parse_graph_text(text)


def solve_report(G: Graph, *, with_chi=False, with_poset=False,
                 oracle=False) -> dict:
    t0 = time.perf_counter()
    k, colouring = nested_chromatic_number(G)
    timings = {"solve": (time.perf_counter() - t0) * 1e3}
    rep = {
        "n": G.n,
        "chi_nested": k,
        "classes": [[G.label(v) for v in cls] for cls in colouring.classes],
    }
    if with_chi:
        t0 = time.perf_counter()
        rep["chi"] = chromatic_number_exact(G)
        timings["chi"] = (time.perf_counter() - t0) * 1e3
    mapping = dedup(G)
    rep["duplicate_classes"] = [[G.label(v) for v in cls] for cls in mapping.classes if len(cls) > 1]
    if with_poset:
        core = mapping.image
        rep["poset_dot"] = hasse_dot(weak_duplicate_poset(core))
    if oracle:
        if G.n <= DEFAULT_BRUTE_FORCE_CAP:
            t0 = time.perf_counter()
            rep["oracle"] = brute_force_nested_chromatic(G)
            timings["oracle"] = (time.perf_counter() - t0) * 1e3
        else:
            rep["oracle"] = None
    rep["timings_ms"] = {key: round(v, 3) for key, v in timings.items()}
    return rep


def _print_solve(rep: dict, args) -> None:
    print(f"n = {rep['n']}")
    print(f"chi_N = {rep['chi_nested']}")
    if "chi" in rep:
        print(f"chi = {rep['chi']}")
    if args.coloring:
        for i, cls in enumerate(rep["classes"], 1):
            print(f"class {i}: " + " >= ".join(cls))
    if args.dedup:
        dups = rep["duplicate_classes"]
        print("duplicate classes: " + ("; ".join("{" + ", ".join(c) + "}" for c in dups) if dups else "none"))
    if args.poset_dot:
        print(rep["poset_dot"])
    if args.oracle:
        if rep["oracle"] is None:
            print(f"oracle: skipped (n > {DEFAULT_BRUTE_FORCE_CAP})")
        elif rep["oracle"] == rep["chi_nested"]:
            print("oracle: agree")
        else:
            print(f"oracle: DISAGREE (brute force gives {rep['oracle']})")


def cmd_solve(args) -> int:
    try:
        docs = _load(args.input, args.format)
    except (FormatError, GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    status = 0
    reports = []
    for doc in docs:
        rep = solve_report(doc.graph, with_chi=args.chi, with_poset=args.poset_dot,
                           oracle=args.oracle)
        if args.oracle and rep["oracle"] is not None and rep["oracle"] != rep["chi_nested"]:
            status = EXIT_ORACLE
        if args.json:
            reports.append(rep)
        else:
            if len(docs) > 1:
                print(f"# {write_graph6(doc.graph)}")
            _print_solve(rep, args)
    if args.json:
        print(json.dumps(reports[0] if len(reports) == 1 else reports, indent=2))
    return status


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


FAMILIES = {
    "complete": lambda a: C.complete(a.n),
    "empty": lambda a: C.empty(a.n),
    "complete-multipartite": lambda a: C.complete_multipartite(_ints(a.parts)),
    "turan": lambda a: C.turan(a.n, a.r),
    "cycle": lambda a: C.cycle(a.n),
    "anticycle": lambda a: C.anticycle(a.n),
    "path": lambda a: C.path(a.n),
    "star": lambda a: C.star(a.n),
    "wheel": lambda a: C.wheel(a.n),
    "windmill": lambda a: C.windmill(a.k, a.n),
    "petersen": lambda a: C.petersen(),
    "kneser": lambda a: C.kneser(a.n, a.k),
    "cube": lambda a: C.cube(a.n),
    "crown": lambda a: C.crown(a.n),
    "nested-bipartite": lambda a: C.nested_bipartite(_ints(a.a), a.s),
    "threshold": lambda a: C.threshold(list(a.script)),
    "mycielski": lambda a: _iterate(C.mycielski, parse_graph6(a.of) if a.of else C.complete(2), a.times),
    "mycielski-family": lambda a: C.mycielski_graph(a.k),
}

OPERATIONS = {
    "union": C.disjoint_union,
    "join": C.join,
    "direct": C.direct_product,
    "cartesian": C.cartesian_product,
    "strong": C.strong_product,
    "composition": C.composition,
}


def _iterate(f, G, times):
    for _ in range(times):
        G = f(G)
    return G


def cmd_generate(args) -> int:
    try:
        if args.family in OPERATIONS:
            if not (args.of and args.with_):
                raise GraphError(f"{args.family} needs --of and --with graph6 operands")
            G = OPERATIONS[args.family](parse_graph6(args.of), parse_graph6(args.with_))
        else:
            G = FAMILIES[args.family](args)
    except (GraphError, FormatError, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    sys.stdout.write(write_graph6(G) + "\n" if args.output == "graph6" else write_edge_list(G))
    return 0


def _emit(rows: list[dict], fmt: str, extra: dict | None = None) -> None:
    if fmt == "json":
        payload = dict(extra or {})
        payload["rows"] = rows
        print(json.dumps(payload, indent=2))
        return
    if extra:
        for key, val in extra.items():
            print(f"# {key}: {json.dumps(val)}")
    if rows:
        buf = _io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())


def cmd_enumerate(args) -> int:
    lo = args.min_n if args.min_n is not None else args.n
    hi = args.max_n if args.max_n is not None else args.n
    if lo is None or hi is None:
        print("error: give --n or --min-n/--max-n", file=sys.stderr)
        return EXIT_PARSE
    if hi > MAX_ORDER:
        print(f"error: enumeration is capped at n <= {MAX_ORDER}", file=sys.stderr)
        return EXIT_PARSE
    filt = GraphClassFilter(args.connected, args.bipartite, lo, hi)
    exp = args.experiment
    if exp == "graphs":
        rows = [{"n": n, "graph6": write_graph6(G)} for n in range(lo, hi + 1) for G in generate_graphs(n, filt)]
        if args.output_format == "csv" and not args.counts:
            sys.stdout.write("".join(r["graph6"] + "\n" for r in rows))
        else:
            counts = {}
            for r in rows:
                counts[r["n"]] = counts.get(r["n"], 0) + 1
            _emit([{"n": n, "count": c} for n, c in sorted(counts.items())], args.output_format)
        return 0
    if exp == "triples":
        for n in range(lo, hi + 1):
            rep = classify_triples(n, generate_graphs(n, filt))
            rows = [{"n": r.n, "chi": r.chi, "chi_n": r.chi_n, "witness": r.witness,
                     "connected": rep.connected_witness[(r.chi, r.chi_n)]} for r in rep.records]
            extra = {"n": n, "gaps": rep.gaps}
            if not (args.connected or args.bipartite):
                extra["matches_exclusion_list"] = rep.pairs == expected_pairs(n)
            _emit(rows, args.output_format, extra)
        return 0
    if exp == "complement":
        scan = complement_conjecture_scan(hi, lo)
        rows = [{"n": n, "min_slack": s, "witness": scan.witness[n]} for n, s in sorted(scan.min_slack.items())]
        _emit(rows, args.output_format, {"note": "conjecture scan, not a proof",
                                          "counterexamples": scan.counterexamples})
        return 0
    if exp == "bipartite-count":
        rows = [{"n": n, "by_sequences": count_by_sequences(n), "by_enumeration": count_by_enumeration(n),
                 "duplicate_free": len(duplicate_free_colour_nested_bipartite(n))}
                for n in range(max(lo, 2), hi + 1)]
        _emit(rows, args.output_format)
        return 0
    if exp == "planar":
        rows = [{"n": hi, "k": k, "chi_n": s, "graph6": write_graph6(G)} for k, G, s in planar_sweep(hi)]
        _emit(rows, args.output_format)
        return 0
    if exp == "oracle":
        rows = []
        status = 0
        for n in range(lo, hi + 1):
            mismatches = [write_graph6(G) for G in generate_graphs(n, filt)
                          if nested_chromatic_number(G)[0] != brute_force_nested_chromatic(G)]
            rows.append({"n": n, "mismatches": len(mismatches)})
            if mismatches:
                status = EXIT_ORACLE
        _emit(rows, args.output_format)
        return status
    return EXIT_PARSE


def cmd_verify(args) -> int:
    try:
        doc = _load(args.graph, args.format)[0]
        G = doc.graph
        index = {G.label(v): v for v in range(G.n)}
        partition = []
        for lineno, line in enumerate(_read(args.partition).splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                partition.append([index[t] for t in line.replace(",", " ").split()])
            except KeyError as exc:
                raise FormatError(f"line {lineno}: unknown vertex {exc.args[0]}") from None
        bad = first_bad_class(G, partition)
    except (FormatError, GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    rep = {"n": G.n, "classes": len(partition), "nested": bad is None}
    if bad is not None:
        rep["offending_class"] = [G.label(v) for v in partition[bad]]
    if args.json:
        print(json.dumps(rep, indent=2))
    else:
        print(f"classes = {rep['classes']}")
        print("nested: yes" if bad is None else
              "nested: no (class {" + ", ".join(rep["offending_class"]) + "} is not nested)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nestchroma", description="Nested chromatic numbers of graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="compute chi_N of input graphs")
    s.add_argument("input", nargs="?", default="-", help="edge list or graph6 file ('-' = stdin)")
    s.add_argument("--format", choices=["auto", "edge-list", "graph6"], default="auto")
    s.add_argument("--coloring", action="store_true", help="print an optimal nested colouring")
    s.add_argument("--dedup", action="store_true", help="print duplicate classes")
    s.add_argument("--poset-dot", action="store_true", help="print the Hasse diagram in DOT")
    s.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    s.add_argument("--chi", action="store_true", help="also compute the chromatic number")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_solve)

    g = sub.add_parser("generate", help="build a named family or operation")
    g.add_argument("family", choices=sorted(FAMILIES) + sorted(OPERATIONS))
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--r", type=int)
    g.add_argument("--s", type=int)
    g.add_argument("--a", help="comma-separated weakly decreasing sequence")
    g.add_argument("--parts", help="comma-separated part sizes")
    g.add_argument("--script", help="threshold steps, e.g. 'iddi'")
    g.add_argument("--of", help="graph6 operand")
    g.add_argument("--with", dest="with_", help="second graph6 operand")
    g.add_argument("--times", type=int, default=1)
    g.add_argument("--output", choices=["graph6", "edge-list"], default="graph6")
    g.set_defaults(func=cmd_generate)

    e = sub.add_parser("enumerate", help="exhaustive experiments on small graphs")
    e.add_argument("--n", type=int)
    e.add_argument("--min-n", type=int)
    e.add_argument("--max-n", type=int)
    e.add_argument("--connected", action="store_true")
    e.add_argument("--bipartite", action="store_true")
    e.add_argument("--experiment", default="graphs",
                   choices=["graphs", "triples", "complement", "bipartite-count", "planar", "oracle"])
    e.add_argument("--counts", action="store_true", help="graphs experiment: print counts only")
    e.add_argument("--output-format", choices=["csv", "json"], default="csv")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="check whether a partition is a nested colouring")
    v.add_argument("partition", help="file with one colour class per line")
    v.add_argument("--graph", required=True, help="graph file (edge list or graph6)")
    v.add_argument("--format", choices=["auto", "edge-list", "graph6"], default="auto")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
