"""Invariant suites over the corpus, run serially or on a process pool.

Tasks are plain tuples of spec strings so they pickle cheaply; results come
back in task order whatever the worker count.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import checks, solver
from .errors import MisNormalError, Timeout
from .families import corpus, generate
from .graph import (
    VertexSet,
    closed_neighborhood,
    complement_closed_neighborhood,
    direct_product,
    induced_subgraph,
)
from .io import from_edge_list, from_graph6, to_edge_list, to_graph6
from .oracle import oracle_mis
from .reports import IMPRIMITIVE, INCONCLUSIVE, VERIFIED, VIOLATED, HYPOTHESIS_NOT_MET
from .symmetry import is_primitive_group, is_vertex_transitive, known_group

PASS, FAIL, SKIP = "pass", "fail", "skip"


def _row(suite, graphs, status, detail=""):
    return {"suite": suite, "graphs": list(graphs), "status": status, "detail": detail}


def _from_report(suite, graphs, rep):
    status = {VERIFIED: PASS, HYPOTHESIS_NOT_MET: SKIP, INCONCLUSIVE: INCONCLUSIVE, VIOLATED: FAIL}[rep.status]
    return _row(suite, graphs, status, rep.status + ("; " + "; ".join(rep.notes) if rep.notes else ""))


def run_oracle(spec):
    G = generate(spec)
    if G.n > 20:
        return _row("oracle", [spec], SKIP, "more than 20 vertices")
    a, sets = oracle_mis(G)
    res = solver.enumerate_mis(G)
    ok = res.alpha == a and res.complete and [s.bits for s in res.sets] == [s.bits for s in sets]
    return _row("oracle", [spec], PASS if ok else FAIL, f"alpha={a} |I|={len(sets)}")


def run_ratio_bound(spec):
    return _from_report("ratio-bound", [spec], checks.verify_ratio_bound(generate(spec)))


def _induced_candidates(G, res):
    n = G.n
    if n <= 8:
        return [VertexSet(n, b) for b in range(1, 1 << n)]
    cands = {G.vertices().bits}
    for v in range(n):
        cands.add(closed_neighborhood(G, 1 << v).bits)
        cands.add(complement_closed_neighborhood(G, 1 << v).bits)
    for S in res.sets:
        cands.add(S.complement().bits)
        cands.add(complement_closed_neighborhood(G, S.bits & -S.bits).bits)
    return [VertexSet(n, b) for b in sorted(cands) if b]


def run_induced_ratio(spec):
    G = generate(spec)
    res = solver.enumerate_mis(G)
    a = res.alpha
    checked = 0
    for B in _induced_candidates(G, res):
        ab = solver.alpha(induced_subgraph(G, B)[0])
        checked += 1
        if a * len(B) > ab * G.n:
            return _row("induced-ratio", [spec], FAIL, f"B={B.to_list()} breaks the bound")
        if a * len(B) == ab * G.n and any(len(S & B) != ab for S in res.sets):
            return _row("induced-ratio", [spec], FAIL, f"B={B.to_list()} equality without |S & B| = alpha(B)")
    return _row("induced-ratio", [spec], PASS, f"{checked} subsets")


def run_bipartite(spec):
    G = generate(spec)
    if G.num_edges == 0:
        return _row("bipartite-corollary", [spec], SKIP, "edgeless")
    return _from_report("bipartite-corollary", [spec], checks.verify_bipartite_corollary(G))


def run_counting(spec):
    G = generate(spec)
    res = solver.enumerate_mis(G)
    counts = solver.mis_membership_counts(G, res)
    r = counts[0]
    ok = all(c == r for c in counts) and r * G.n == res.alpha * res.num_sets
    return _row("counting-identity", [spec], PASS if ok else FAIL, f"r={r} |V|={G.n} alpha={res.alpha} |I|={res.num_sets}")


def run_graph6(spec):
    G = generate(spec)
    ok = from_graph6(to_graph6(G)) == G and from_graph6(to_graph6(G, header=True)) == G
    ok = ok and from_edge_list(to_edge_list(G)) == G
    return _row("graph6-roundtrip", [spec], PASS if ok else FAIL, to_graph6(G))


def run_transitive(spec):
    ok = is_vertex_transitive(generate(spec))
    return _row("transitivity", [spec], PASS if ok else FAIL)


def run_primitive_group(spec):
    G = generate(spec)
    grp, _ = known_group(G)
    if not is_primitive_group(grp):
        return _row("primitive-group", [spec], SKIP, "Aut(G) imprimitive")
    rep = checks.check_is_primitive(G, use_group=False)
    status = FAIL if rep.verdict == IMPRIMITIVE else (PASS if rep.verdict != INCONCLUSIVE else INCONCLUSIVE)
    return _row("primitive-group", [spec], status, rep.verdict)


def run_partition(spec):
    return _from_report("partition", [spec], checks.verify_imprimitive_partition(generate(spec)))


def run_eq1(spec_g, spec_h):
    res = checks.check_eq1(generate(spec_g), generate(spec_h))
    d = f"alpha(GxH)={res.alpha_product} eq1={res.eq1_value}"
    return _row("eq1-pairs", [spec_g, spec_h], PASS if res.equal else FAIL, d)


SINGLE = {
    "oracle": run_oracle,
    "ratio-bound": run_ratio_bound,
    "induced-ratio": run_induced_ratio,
    "bipartite-corollary": run_bipartite,
    "counting-identity": run_counting,
    "graph6-roundtrip": run_graph6,
    "transitivity": run_transitive,
    "primitive-group": run_primitive_group,
    "partition": run_partition,
}
PAIRS = {"eq1-pairs": run_eq1}
ALL_SUITES = tuple(SINGLE) + tuple(PAIRS)
DEFAULT_PAIR_CAP = 100


def build_tasks(max_vertices: int, suites, pair_cap: int = DEFAULT_PAIR_CAP):
    specs = [(str(s), g.n) for s, g in corpus(max_vertices)]
    tasks = []
    for suite in suites:
        if suite in SINGLE:
            tasks += [(suite, (s,)) for s, _ in specs]
        elif suite in PAIRS:
            for (a, na), (b, nb) in itertools.combinations_with_replacement(specs, 2):
                if na * nb <= pair_cap:
                    tasks.append((suite, (a, b)))
        else:
            raise ValueError(f"unknown suite {suite!r}")
    return tasks


def run_task(task, budget_secs=None):
    import os

    if budget_secs is not None:
        os.environ["MISNORMAL_BUDGET_SECS"] = str(budget_secs)
    suite, args = task
    fn = SINGLE.get(suite) or PAIRS[suite]
    try:
        return fn(*args)
    except Timeout as exc:
        return _row(suite, args, INCONCLUSIVE, f"Timeout: {exc}")
    except MisNormalError as exc:
        return _row(suite, args, FAIL, f"{type(exc).__name__}: {exc}")


def run_corpus(max_vertices: int, suites=ALL_SUITES, workers: int = 1, budget_secs=None, pair_cap: int = DEFAULT_PAIR_CAP):
    tasks = build_tasks(max_vertices, suites, pair_cap)
    if workers <= 1:
        return [run_task(t, budget_secs) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run_task, tasks, [budget_secs] * len(tasks), chunksize=4))


def summarize(rows):
    out = {}
    for r in rows:
        s = out.setdefault(r["suite"], {PASS: 0, FAIL: 0, SKIP: 0, INCONCLUSIVE: 0})
        s[r["status"]] += 1
    return out
