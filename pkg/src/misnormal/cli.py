"""Command-line front end.

    misnormal alpha cycle:5 kneser:5,2
    misnormal check normal cycle:5 cycle:5
    misnormal check primitive copies:2xcomplete:3
    misnormal check theorem:power complete:3 --n 3
    misnormal corpus 12 --suite ratio-bound --workers 4
    misnormal product cycle:5 cycle:5 --out c5sq.g6
    misnormal info petersen

Inputs are family specs (``cycle:5``, ``kneser:5,2``, ``circulant:9,1+2``,
``copies:2xcomplete:3``, ``petersen``), optionally raised to a direct power
with ``^N`` (``cycle:5^2``), or ``@path`` for a .g6 / edge-list file.

Exit codes: 0 verified / normal / primitive, 1 otherwise, 2 bad input,
3 budget exhausted or inconclusive.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import checks, solver, suites
from .errors import BadParameters, FormatError, GraphError, MisNormalError, Timeout, TooLarge
from .families import generate, parse_spec
from .graph import (
    DEFAULT_VERTEX_CAP,
    Graph,
    ProductGraph,
    VertexSet,
    direct_product,
    fmt_ratio,
    is_bipartite,
    is_connected,
    power,
)
from .io import read_graph, to_graph6, write_graph
from .reports import HYPOTHESIS_NOT_MET, INCONCLUSIVE, NORMAL, PRIMITIVE, VERIFIED

EXIT_OK, EXIT_NO, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3

THEOREMS = {
    "ratio-bound": 1,
    "induced-ratio": 1,
    "bipartite": 1,
    "partition": 1,
    "dichotomy": 2,
    "primitivity": 2,
    "trichotomy": 2,
    "power": 1,
}


class InputError(MisNormalError):
    pass


def load_input(text: str, max_vertices: int = DEFAULT_VERTEX_CAP) -> Graph | ProductGraph:
    if text.startswith("@"):
        try:
            return read_graph(text[1:])
        except OSError as exc:
            raise InputError(str(exc)) from exc
    base, sep, exp = text.rpartition("^")
    if sep:
        try:
            k = int(exp)
        except ValueError as exc:
            raise InputError(f"bad exponent in {text!r}") from exc
        return power(generate(parse_spec(base)), k, max_vertices)
    return generate(parse_spec(text))


def _graph(X) -> Graph:
    return X.graph if isinstance(X, ProductGraph) else X


def _parse_set(text: str | None, n: int) -> VertexSet | None:
    if text is None:
        return None
    try:
        return VertexSet.of(n, [int(t) for t in text.split(",") if t.strip()])
    except ValueError as exc:
        raise InputError(f"bad vertex list {text!r}") from exc


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-secs", type=float, default=None, help="per solver call (default $MISNORMAL_BUDGET_SECS or 600)")
    p.add_argument("--max-sets", type=int, default=solver.DEFAULT_MAX_SETS)
    p.add_argument("--max-vertices", type=int, default=DEFAULT_VERTEX_CAP)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", default=None, help="write output here instead of stdout")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings in reports")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="misnormal", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    _common(common)

    p = sub.add_parser("alpha", parents=[common], help="independence number, ratio, |I(G)| and r")
    p.add_argument("inputs", nargs="+")

    p = sub.add_parser("check", parents=[common], help="normal | primitive | eq1 | theorem:<id>")
    p.add_argument("kind")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--n", type=int, default=3, help="exponent for theorem:power")
    p.add_argument("--subset", default=None, help="comma-separated vertices (B or G')")

    p = sub.add_parser("corpus", parents=[common], help="run invariant suites over the corpus")
    p.add_argument("max_vertices", type=int)
    p.add_argument("--suite", action="append", choices=suites.ALL_SUITES, dest="suites")
    p.add_argument("--pair-cap", type=int, default=suites.DEFAULT_PAIR_CAP)

    p = sub.add_parser("product", parents=[common], help="build a direct product or power")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--power", type=int, default=None)

    p = sub.add_parser("info", parents=[common], help="basic invariants of a graph")
    p.add_argument("inputs", nargs="+")
    return parser


def _limits(args) -> checks.Limits:
    return checks.Limits(budget_secs=args.budget_secs, max_sets=args.max_sets)


def _table(rows: list[dict]) -> str:
    if not rows:
        return ""
    keys = [k for k in rows[0] if not isinstance(rows[0][k], (dict, list)) or k == "graphs"]
    cells = [[str(r.get(k, "")) for k in keys] for r in rows]
    widths = [max(len(k), *(len(c[i]) for c in cells)) for i, k in enumerate(keys)]
    line = "  ".join(k.ljust(w) for k, w in zip(keys, widths))
    body = ["  ".join(c.ljust(w) for c, w in zip(cell, widths)) for cell in cells]
    return "\n".join([line, "  ".join("-" * w for w in widths), *body])


def _emit(args, dicts: list[dict]) -> None:
    if args.format == "table":
        text = _table(dicts) + "\n"
    else:
        text = "".join(json.dumps(d, sort_keys=True, separators=(",", ":")) + "\n" for d in dicts)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_alpha(args) -> int:
    out = []
    for text in args.inputs:
        G = _graph(load_input(text, args.max_vertices))
        res = solver.enumerate_mis(G, args.max_sets, args.budget_secs)
        counts = solver.mis_membership_counts(G, res) if res.complete else []
        r = counts[0] if counts and all(c == counts[0] for c in counts) else None
        out.append(
            {
                "input": text,
                "n": G.n,
                "alpha": res.alpha,
                "ratio": fmt_ratio(G.independence_ratio(res.alpha)),
                "num_mis": res.num_sets,
                "complete": res.complete,
                "r": r,
            }
        )
    _emit(args, out)
    return EXIT_OK


def cmd_check(args) -> int:
    kind = args.kind
    limits = _limits(args)
    graphs = [load_input(t, args.max_vertices) for t in args.inputs]

    def need(k):
        if len(graphs) != k:
            raise InputError(f"{kind} takes {k} graph(s), got {len(graphs)}")

    if kind == "normal":
        need(2)
        rep = checks.check_mis_normal(graphs[0], graphs[1], limits)
        code = EXIT_OK if rep.verdict == NORMAL else (EXIT_BUDGET if rep.verdict == INCONCLUSIVE else EXIT_NO)
    elif kind == "primitive":
        need(1)
        rep = checks.check_is_primitive(graphs[0], limits)
        code = EXIT_OK if rep.verdict == PRIMITIVE else (EXIT_BUDGET if rep.verdict == INCONCLUSIVE else EXIT_NO)
    elif kind == "eq1":
        need(2)
        rep = checks.check_eq1(graphs[0], graphs[1], limits=limits)
        code = EXIT_OK if rep.equal else EXIT_NO
    elif kind.startswith("theorem:"):
        tid = kind.split(":", 1)[1]
        if tid not in THEOREMS:
            raise InputError(f"unknown theorem id {tid!r}; choose from {', '.join(THEOREMS)}")
        need(THEOREMS[tid])
        rep = _run_theorem(tid, graphs, args, limits)
        code = {VERIFIED: EXIT_OK, INCONCLUSIVE: EXIT_BUDGET}.get(rep.status, EXIT_NO)
    else:
        raise InputError(f"unknown check kind {kind!r}")
    _emit(args, [rep.to_dict(timings=args.timings)])
    return code


def _run_theorem(tid, graphs, args, limits):
    if tid == "induced-ratio":
        B = _parse_set(args.subset, _graph(graphs[0]).n)
        if B is None:
            raise InputError("theorem:induced-ratio needs --subset")
        return checks.verify_induced_ratio(graphs[0], B, limits)
    if tid == "trichotomy":
        Gp = _parse_set(args.subset, _graph(graphs[0]).n)
        if Gp is None:
            raise InputError("theorem:trichotomy needs --subset for G'")
        return checks.verify_product_trichotomy(graphs[0], Gp, graphs[1], limits)
    if tid == "power":
        return checks.verify_power_corollary(graphs[0], args.n, limits)
    fn = {
        "ratio-bound": checks.verify_ratio_bound,
        "bipartite": checks.verify_bipartite_corollary,
        "partition": checks.verify_imprimitive_partition,
        "dichotomy": checks.verify_dichotomy,
        "primitivity": checks.verify_primitivity_theorem,
    }[tid]
    return fn(*graphs, limits=limits)


def cmd_corpus(args) -> int:
    chosen = args.suites or list(suites.ALL_SUITES)
    rows = suites.run_corpus(args.max_vertices, chosen, args.workers, args.budget_secs, args.pair_cap)
    summary = suites.summarize(rows)
    if args.format == "table":
        table = [{"suite": s, **c} for s, c in summary.items()]
        _emit(args, table)
    else:
        _emit(args, [{"max_vertices": args.max_vertices, "summary": summary, "rows": rows}])
    if any(c[suites.FAIL] for c in summary.values()):
        return EXIT_NO
    if any(c[INCONCLUSIVE] for c in summary.values()):
        return EXIT_BUDGET
    return EXIT_OK


def cmd_product(args) -> int:
    graphs = [_graph(load_input(t, args.max_vertices)) for t in args.inputs]
    if args.power is not None:
        if len(graphs) != 1:
            raise InputError("--power takes a single graph")
        P = power(graphs[0], args.power, args.max_vertices)
    elif len(graphs) == 2:
        P = direct_product(graphs[0], graphs[1], args.max_vertices)
    else:
        raise InputError("product takes two graphs, or one with --power")
    info = {"factors": [g.label for g in P.factors], "n": P.n, "edges": P.graph.num_edges, "graph6": to_graph6(P.graph)}
    if args.out:
        write_graph(P.graph, args.out)
        info["written"] = args.out
        args.out = None
    _emit(args, [info])
    return EXIT_OK


def cmd_info(args) -> int:
    from .symmetry import automorphism_group, is_primitive_group

    out = []
    for text in args.inputs:
        G = _graph(load_input(text, args.max_vertices))
        degrees = sorted({G.degree(v) for v in range(G.n)})
        row = {
            "input": text,
            "n": G.n,
            "edges": G.num_edges,
            "degrees": degrees,
            "bipartite": is_bipartite(G),
            "connected": is_connected(G),
            "graph6": to_graph6(G),
        }
        try:
            grp = automorphism_group(G)
            row.update(aut_order=grp.order, vertex_transitive=grp.is_transitive())
            if grp.is_transitive():
                row["aut_primitive"] = is_primitive_group(grp)
        except TooLarge:
            row["aut_order"] = None
        out.append(row)
    _emit(args, out)
    return EXIT_OK


COMMANDS = {"alpha": cmd_alpha, "check": cmd_check, "corpus": cmd_corpus, "product": cmd_product, "info": cmd_info}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget_secs is not None and args.budget_secs <= 0:
        parser.error("--budget-secs must be positive")
    if args.max_sets <= 0 or args.max_vertices <= 0 or args.workers <= 0:
        parser.error("budgets and worker count must be positive")
    try:
        return COMMANDS[args.command](args)
    except (InputError, BadParameters, FormatError, GraphError) as exc:
        print(f"misnormal: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except Timeout as exc:
        print(f"misnormal: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
