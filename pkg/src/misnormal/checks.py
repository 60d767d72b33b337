"""Decision procedures for MIS-normality and IS-primitivity, and instance checks
of the structural results about direct products of vertex-transitive graphs.

Every ``verify_*`` function returns a :class:`TheoremReport`: hypotheses are
evaluated in order (stopping at the first one that fails), then the
conclusion.  ``violated`` means all hypotheses held and the conclusion did
not, which for a proven statement points at a bug in this package.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import solver
from .errors import CapExceeded, MisNormalError, Timeout, TooLarge
from .graph import (
    Graph,
    ProductGraph,
    VertexSet,
    closed_neighborhood,
    complement_closed_neighborhood,
    direct_product,
    fmt_ratio,
    induced_subgraph,
    is_bipartite,
    is_connected,
    iter_bits,
    power,
    project,
)
from .reports import (
    HYPOTHESIS_NOT_MET,
    IMPRIMITIVE,
    INCONCLUSIVE,
    NORMAL,
    NOT_NORMAL,
    PRIMITIVE,
    VERIFIED,
    VIOLATED,
    Hypothesis,
    NormalityReport,
    PrimitivityReport,
    TheoremReport,
)
from .symmetry import is_primitive_group, is_vertex_transitive, known_group, set_orbit, is_set_partition

GraphLike = Graph | ProductGraph


@dataclass(frozen=True)
class Limits:
    budget_secs: float | None = None
    max_sets: int = solver.DEFAULT_MAX_SETS
    subset_cap: int = 1 << 24
    exhaustive_vertices: int = 20


DEFAULT_LIMITS = Limits()


def _g(X: GraphLike) -> Graph:
    return X.graph if isinstance(X, ProductGraph) else X


def _name(X: GraphLike) -> str:
    G = _g(X)
    return G.label or f"graph on {G.n} vertices"


def ratio(X: GraphLike, limits: Limits = DEFAULT_LIMITS) -> Fraction:
    G = _g(X)
    return G.independence_ratio(solver.alpha(G, limits.budget_secs))


# -- product independence number and normality ------------------------------


@dataclass(frozen=True)
class Eq1Result:
    alpha_product: int
    eq1_value: int
    equal: bool

    def to_dict(self, timings: bool = False):
        return {"kind": "eq1", **self.__dict__}


def _require_transitive(*graphs: GraphLike) -> None:
    from .errors import NotTransitive

    for X in graphs:
        if not is_vertex_transitive(X):
            raise NotTransitive(f"{_name(X)} is not vertex-transitive")


def check_eq1(G: GraphLike, H: GraphLike, certify: bool = False, limits: Limits = DEFAULT_LIMITS) -> Eq1Result:
    """alpha(G x H) against max{alpha(G)|H|, alpha(H)|G|}."""
    if certify:
        _require_transitive(G, H)
    g, h = _g(G), _g(H)
    ag, ah = solver.alpha(g, limits.budget_secs), solver.alpha(h, limits.budget_secs)
    ap = solver.alpha(direct_product(g, h).graph, limits.budget_secs)
    eq1 = max(ag * h.n, ah * g.n)
    return Eq1Result(ap, eq1, ap == eq1)


def classify_set(P: ProductGraph, S: VertexSet, factor_alphas: list[int]) -> int | None:
    """Axis i if S is the preimage of a maximum independent set of factor i, else None."""
    sizes = P.factor_sizes
    total = P.n
    for axis, f in enumerate(P.factors):
        proj = project(P, S, axis)
        if len(S) != len(proj) * (total // sizes[axis]):
            continue
        if len(proj) == factor_alphas[axis] and f.is_independent(proj):
            return axis
    return None


def _tag(axis: int | None, k: int) -> str:
    if axis is None:
        return "mixed"
    if k == 2:
        return ("G_type", "H_type")[axis]
    return f"axis{axis}"


def check_product_normal(P: ProductGraph, limits: Limits = DEFAULT_LIMITS) -> NormalityReport:
    """Classify every maximum independent set of a product against its factors.

    For more than two factors a set counts as normal when it is the full
    preimage of a maximum independent set of a single coordinate.
    """
    t0 = time.monotonic()
    alphas = [solver.alpha(f, limits.budget_secs) for f in P.factors]
    eq1 = max(a * (P.n // f.n) for a, f in zip(alphas, P.factors))
    names = [_name(f) for f in P.factors]
    try:
        res = solver.enumerate_mis(P.graph, limits.max_sets, limits.budget_secs)
    except Timeout:
        return NormalityReport(names, -1, eq1, INCONCLUSIVE, 0, False, [], None, P)
    k = len(P.factors)
    tags = []
    witness = None
    for S in res.sets:
        t = _tag(classify_set(P, S, alphas), k)
        tags.append(t)
        if t == "mixed" and witness is None:
            witness = S
    if witness is not None:
        verdict = NOT_NORMAL
    elif res.complete:
        verdict = NORMAL
    else:
        verdict = INCONCLUSIVE
    rep = NormalityReport(names, res.alpha, eq1, verdict, res.num_sets, res.complete, tags, witness, P)
    rep.timings["total"] = time.monotonic() - t0
    return rep


def check_mis_normal(G: GraphLike, H: GraphLike, limits: Limits = DEFAULT_LIMITS) -> NormalityReport:
    return check_product_normal(direct_product(G, H), limits)


# -- IS-primitivity ------------------------------------------------------------


def check_is_primitive(X: GraphLike, limits: Limits = DEFAULT_LIMITS, use_group: bool = True) -> PrimitivityReport:
    """Search for an imprimitive independent set.

    Any imprimitive A sits inside a maximum independent set (equality case of
    the |A|/|N[A]| <= alpha/|V| bound for vertex-transitive graphs), so only
    subsets of members of I(G) are scanned.  When that space is above
    ``limits.subset_cap`` and ``use_group`` is set, a primitive automorphism
    (sub)group decides instead: complements of closed neighbourhoods of
    maximum imprimitive sets are blocks of Aut(G), so a primitive group rules
    them out.  Otherwise the verdict is inconclusive.
    """
    t0 = time.monotonic()
    G = _g(X)
    P = X if isinstance(X, ProductGraph) else None
    try:
        res = solver.enumerate_mis(G, limits.max_sets, limits.budget_secs)
    except Timeout:
        return PrimitivityReport(_name(X), INCONCLUSIVE, -1, G.n, "timeout", product=P)
    a, n = res.alpha, G.n
    rep = PrimitivityReport(_name(X), INCONCLUSIVE, a, n, "subset_scan", product=P)
    if not res.complete:
        rep.notes.append(f"I(G) enumeration stopped at {res.num_sets} sets")
        return rep
    if a <= 1:
        rep.verdict = PRIMITIVE
        rep.notes.append("alpha <= 1: no nonempty set is smaller than alpha")
        return rep
    space = res.num_sets * ((1 << a) - 2)
    if space > limits.subset_cap:
        if use_group:
            return _group_route(X, rep, space, limits)
        rep.notes.append(f"subset space {space} above cap {limits.subset_cap}")
        return rep

    found: set[int] = set()
    for S in res.sets:
        cap = 4096
        while True:
            hits, scanned, bits = solver.imprimitive_subsets_within(G, S, a, cap)
            if hits <= cap:
                break
            cap = hits
        rep.scanned += scanned
        found.update(bits)
    rep.timings["total"] = time.monotonic() - t0
    if not found:
        rep.verdict = PRIMITIVE
        return rep
    rep.verdict = IMPRIMITIVE
    witnesses = sorted((VertexSet(n, b) for b in found), key=VertexSet.sort_key)
    rep.num_witnesses = len(witnesses)
    rep.witness = witnesses[0]
    rep.witness_closed_neighborhood = closed_neighborhood(G, rep.witness)
    top = max(len(w) for w in witnesses)
    rep.max_imprimitive = next(w for w in witnesses if len(w) == top)
    return rep


def _group_route(X: GraphLike, rep: PrimitivityReport, space: int, limits: Limits) -> PrimitivityReport:
    rep.method = "primitive_automorphism_group"
    try:
        grp, full = known_group(X)
    except TooLarge:
        rep.notes.append(f"subset space {space} above cap and no automorphism group available")
        return rep
    which = "Aut(G)" if full else "a subgroup of Aut(G) built from factor automorphisms"
    if grp.is_transitive() and is_primitive_group(grp):
        rep.verdict = PRIMITIVE
        rep.notes.append(f"{which} is primitive, so no block can arise from an imprimitive set")
    else:
        rep.notes.append(f"subset space {space} above cap and {which} is not primitive")
    return rep


# -- TheoremReport plumbing ----------------------------------------------------


class _Run:
    def __init__(self, statement: str):
        self.report = TheoremReport(statement, [], None, INCONCLUSIVE)
        self.t0 = time.monotonic()

    def hyp(self, name: str, holds: bool | None, evidence: str = "") -> bool:
        """Record a hypothesis; returns True when evaluation should continue."""
        self.report.hypotheses.append(Hypothesis(name, holds, evidence))
        return holds is True

    def stop(self) -> TheoremReport:
        r = self.report
        last = r.hypotheses[-1].holds if r.hypotheses else True
        r.status = HYPOTHESIS_NOT_MET if last is False else INCONCLUSIVE
        r.timings["total"] = time.monotonic() - self.t0
        return r

    def conclude(self, ok: bool | None) -> TheoremReport:
        r = self.report
        r.conclusion = ok
        r.status = INCONCLUSIVE if ok is None else (VERIFIED if ok else VIOLATED)
        r.timings["total"] = time.monotonic() - self.t0
        return r


def _guard(fn: Callable[..., TheoremReport]) -> Callable[..., TheoremReport]:
    """Budget exhaustion anywhere inside a verification yields an inconclusive report."""

    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (Timeout, CapExceeded) as exc:
            rep = TheoremReport(fn.__name__, [], None, INCONCLUSIVE)
            rep.notes.append(f"{type(exc).__name__}: {exc}")
            return rep

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _vt(run: _Run, X: GraphLike, label: str) -> bool:
    try:
        ok = is_vertex_transitive(X)
        ev = "automorphism search" if _g(X).n <= 64 else "transitive product subgroup"
    except TooLarge:
        ok, ev = None, "automorphism group out of reach"
    return run.hyp(f"{label} vertex-transitive", ok, ev)


def _cmp(a: Fraction, b: Fraction) -> str:
    return "=" if a == b else ("<" if a < b else ">")


def independent_sets(G: Graph, limit: int = 1 << 21):
    """All nonempty independent sets of G as bitsets (exhaustive; for small graphs)."""
    out = []

    def grow(cur: int, cand: int):
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            nxt = cur | low
            out.append(nxt)
            if len(out) > limit:
                raise CapExceeded(f"more than {limit} independent sets")
            grow(nxt, cand & ~G.rows[v])

    grow(0, (1 << G.n) - 1)
    return out


# -- instance verifications ----------------------------------------------------


@_guard
def verify_ratio_bound(X: GraphLike, limits: Limits = DEFAULT_LIMITS) -> TheoremReport:
    """|A| / |N[A]| <= alpha / |V| for independent A, with the equality consequences."""
    G = _g(X)
    run = _Run("ratio_bound")
    if not _vt(run, X, "G"):
        return run.stop()
    res = solver.enumerate_mis(G, limits.max_sets, limits.budget_secs)
    if not run.hyp("I(G) fully enumerated", res.complete or None, f"{res.num_sets} sets"):
        return run.stop()
    a, n = res.alpha, G.n
    if n <= limits.exhaustive_vertices:
        pool = independent_sets(G)
        scope = "all independent sets"
    else:
        pool = sorted({A.bits for S in res.sets for A in solver.iter_subsets_of(S)})
        scope = "subsets of maximum independent sets"
    equal_cases = 0
    ok = True
    for bits in pool:
        A = VertexSet(n, bits)
        NA = closed_neighborhood(G, A)
        lhs, rhs = len(A) * n, a * len(NA)
        if lhs > rhs:
            ok = False
            run.report.witnesses["violating_set"] = A
            break
        if lhs == rhs:
            equal_cases += 1
            meets = all(len(S & NA) == len(A) for S in res.sets)
            inside = any(A.issubset(S) for S in res.sets)
            if not (meets and inside):
                ok = False
                run.report.witnesses["equality_failure"] = A
                break
            if len(A) < a and "equality_example" not in run.report.witnesses:
                run.report.witnesses["equality_example"] = A
    run.report.notes.append(f"checked {len(pool)} sets ({scope}); {equal_cases} attain equality")
    return run.conclude(ok)


@_guard
def verify_induced_ratio(X: GraphLike, B: VertexSet, limits: Limits = DEFAULT_LIMITS) -> TheoremReport:
    """alpha(G)/|V| <= alpha(B)/|B|; on equality every S in I(G) meets B in alpha(B) vertices."""
    G = _g(X)
    run = _Run("induced_ratio")
    if not _vt(run, X, "G"):
        return run.stop()
    if not run.hyp("B nonempty", bool(B), f"|B| = {len(B)}"):
        return run.stop()
    res = solver.enumerate_mis(G, limits.max_sets, limits.budget_secs)
    if not run.hyp("I(G) fully enumerated", res.complete or None, f"{res.num_sets} sets"):
        return run.stop()
    sub, _ = induced_subgraph(G, B)
    ab = solver.alpha(sub, limits.budget_secs)
    lhs, rhs = res.alpha * len(B), ab * G.n
    run.report.witnesses["B"] = B
    run.report.notes.append(
        f"alpha(G)/|V| = {fmt_ratio(Fraction(res.alpha, G.n))} {_cmp(Fraction(res.alpha, G.n), Fraction(ab, len(B)))} "
        f"alpha(B)/|B| = {fmt_ratio(Fraction(ab, len(B)))}"
    )
    ok = lhs <= rhs
    if ok and lhs == rhs:
        ok = all(len(S & B) == ab for S in res.sets)
    return run.conclude(ok)


@_guard
def verify_bipartite_corollary(X: GraphLike, limits: Limits = DEFAULT_LIMITS) -> TheoremReport:
    """alpha/|V| <= 1/2 with equality exactly for bipartite graphs."""
    G = _g(X)
    run = _Run("bipartite_corollary")
    if not _vt(run, X, "G"):
        return run.stop()
    if not run.hyp("E(G) nonempty", G.num_edges > 0, f"{G.num_edges} edges"):
        return run.stop()
    a = solver.alpha(G, limits.budget_secs)
    bip = is_bipartite(G)
    run.report.notes.append(f"alpha/|V| = {fmt_ratio(Fraction(a, G.n))}, bipartite = {bip}")
    return run.conclude(2 * a <= G.n and (2 * a == G.n) == bip)


@_guard
def verify_imprimitive_partition(X: GraphLike, limits: Limits = DEFAULT_LIMITS) -> TheoremReport:
    """For a maximum imprimitive A and B = V - N[A]: alpha(B)/|B| = alpha/|V| and
    the images of B under Aut(G) partition V(G) nontrivially."""
    G = _g(X)
    run = _Run("imprimitive_partition")
    if not _vt(run, X, "G"):
        return run.stop()
    if not run.hyp("E(G) nonempty", G.num_edges > 0, "edgeless graphs only have singleton blocks"):
        return run.stop()
    prim = check_is_primitive(X, limits, use_group=False)
    holds = {IMPRIMITIVE: True, PRIMITIVE: False}.get(prim.verdict)
    if not run.hyp("G IS-imprimitive", holds, prim.verdict):
        return run.stop()
    A = prim.max_imprimitive
    B = complement_closed_neighborhood(G, A)
    a = solver.alpha(G, limits.budget_secs)
    ab = solver.alpha(induced_subgraph(G, B)[0], limits.budget_secs)
    grp, full = known_group(X)
    orbit = set_orbit(grp, B)
    partition = is_set_partition(orbit, G.n)
    rep = run.report
    rep.witnesses.update(A=A, B=B)
    if isinstance(X, ProductGraph):
        rep.products.update(A=X, B=X)
    rep.notes.append(f"alpha(B)*|V| = {ab}*{G.n}, alpha*|B| = {a}*{len(B)}; orbit of B has {len(orbit)} members")
    if not full:
        rep.notes.append("orbit taken under a subgroup of Aut(G)")
    return run.conclude(ab * G.n == a * len(B) and partition and len(orbit) > 1)


def _primitivity_holds(rep: PrimitivityReport) -> bool | None:
    return {IMPRIMITIVE: False, PRIMITIVE: True}.get(rep.verdict)


@_guard
def verify_dichotomy(G: GraphLike, H: GraphLike, limits: Limits = DEFAULT_LIMITS) -> TheoremReport:
    """If G x H is MIS-normal, IS-imprimitive and alpha(H)/|H| <= alpha(G)/|G|, then
    (i) ratios equal and (G or H IS-imprimitive, or both bipartite), or
    (ii) ratio strict and (G IS-imprimitive or H disconnected)."""
    g, h = _g(G), _g(H)
    run = _Run("dichotomy")
    if not (_vt(run, G, "G") and _vt(run, H, "H")):
        return run.stop()
    P = direct_product(g, h)
    norm = check_product_normal(P, limits)
    if not run.hyp("G x H MIS-normal", {NORMAL: True, NOT_NORMAL: False}.get(norm.verdict), norm.verdict):
        return run.stop()
    rg, rh = ratio(g, limits), ratio(h, limits)
    if not run.hyp("alpha(H)/|H| <= alpha(G)/|G|", rh <= rg, f"{fmt_ratio(rh)} vs {fmt_ratio(rg)}"):
        return run.stop()
    prim_p = check_is_primitive(P, limits)
    imp = {IMPRIMITIVE: True, PRIMITIVE: False}.get(prim_p.verdict)
    if not run.hyp("G x H IS-imprimitive", imp, prim_p.verdict):
        return run.stop()
    rep = run.report
    rep.witnesses["product_imprimitive"] = prim_p.witness
    rep.products["product_imprimitive"] = P
    pg = _primitivity_holds(check_is_primitive(g, limits))
    if rg == rh:
        ph = _primitivity_holds(check_is_primitive(h, limits))
        both_bip = is_bipartite(g) and is_bipartite(h)
        if pg is False or ph is False or both_bip:
            rep.notes.append(f"case (i): G imprimitive={pg is False}, H imprimitive={ph is False}, both bipartite={both_bip}")
            return run.conclude(True)
        if pg is None or ph is None:
            return run.conclude(None)
        rep.notes.append("anomaly: case (i) holds only if the product itself counts as 'one of them'")
        return run.conclude(True)
    h_disc = not is_connected(h)
    if pg is False or h_disc:
        rep.notes.append(f"case (ii): G imprimitive={pg is False}, H disconnected={h_disc}")
        return run.conclude(True)
    return run.conclude(None if pg is None else False)


@_guard
def verify_primitivity_theorem(G: GraphLike, H: GraphLike, limits: Limits = DEFAULT_LIMITS) -> TheoremReport:
    """Non-bipartite vertex-transitive G, H with equal ratios and G x H MIS-normal
    are IS-primitive, and so is G x H."""
    g, h = _g(G), _g(H)
    run = _Run("primitivity_theorem")
    if not (_vt(run, G, "G") and _vt(run, H, "H")):
        return run.stop()
    if not run.hyp("G, H non-bipartite", not is_bipartite(g) and not is_bipartite(h)):
        return run.stop()
    rg, rh = ratio(g, limits), ratio(h, limits)
    if not run.hyp("alpha(G)/|G| = alpha(H)/|H|", rg == rh, f"{fmt_ratio(rg)} vs {fmt_ratio(rh)}"):
        return run.stop()
    P = direct_product(g, h)
    norm = check_product_normal(P, limits)
    if not run.hyp("G x H MIS-normal", {NORMAL: True, NOT_NORMAL: False}.get(norm.verdict), norm.verdict):
        return run.stop()
    rep = run.report
    parts = {"G": check_is_primitive(g, limits), "H": check_is_primitive(h, limits), "G x H": check_is_primitive(P, limits)}
    for key, pr in parts.items():
        rep.notes.append(f"{key}: {pr.verdict} ({pr.method})")
        if pr.witness is not None:
            rep.witnesses[f"{key} imprimitive"] = pr.witness
            if key == "G x H":
                rep.products[f"{key} imprimitive"] = P
    factors = [_primitivity_holds(parts["G"]), _primitivity_holds(parts["H"])]
    prod = _primitivity_holds(parts["G x H"])
    if False in factors or prod is False:
        return run.conclude(False)
    if None in factors:
        return run.conclude(None)
    if prod is None:
        rep.notes.append("product primitivity inconclusive within budget; factor conclusions asserted only")
    return run.conclude(True)


@_guard
def verify_product_trichotomy(G: GraphLike, Gp: VertexSet, H: GraphLike, limits: Limits = DEFAULT_LIMITS) -> TheoremReport:
    """With G' = G[Gp] ratio-tight and G' x H MIS-normal: (i) G x H MIS-normal, or
    (ii) equal ratios and G IS-imprimitive, or (iii) alpha(G)|H| < alpha(H)|G| and G disconnected."""
    g, h = _g(G), _g(H)
    run = _Run("product_trichotomy")
    if not (_vt(run, G, "G") and _vt(run, H, "H")):
        return run.stop()
    if not run.hyp("G' nonempty", bool(Gp)):
        return run.stop()
    sub, _ = induced_subgraph(g, Gp)
    ag, asub = solver.alpha(g, limits.budget_secs), solver.alpha(sub, limits.budget_secs)
    tight = asub * g.n == ag * sub.n
    if not run.hyp("alpha(G')/|G'| = alpha(G)/|G|", tight, f"{asub}/{sub.n} vs {ag}/{g.n}"):
        return run.stop()
    sub_norm = check_mis_normal(sub, h, limits)
    if not run.hyp("G' x H MIS-normal", {NORMAL: True, NOT_NORMAL: False}.get(sub_norm.verdict), sub_norm.verdict):
        return run.stop()
    rep = run.report
    rep.witnesses["G_prime"] = Gp
    P = direct_product(g, h)
    norm = check_product_normal(P, limits)
    if norm.verdict == NORMAL:
        rep.notes.append(f"case (i): G x H MIS-normal with {norm.num_sets} maximum independent sets")
        return run.conclude(True)
    if norm.witness is not None:
        rep.witnesses["mixed"] = norm.witness
        rep.products["mixed"] = P
    ah = solver.alpha(h, limits.budget_secs)
    lhs, rhs = ag * h.n, ah * g.n
    if lhs == rhs:
        pr = check_is_primitive(G, limits)
        if pr.verdict == IMPRIMITIVE:
            rep.witnesses["G_imprimitive"] = pr.witness
            rep.notes.append("case (ii): equal ratios and G IS-imprimitive")
            return run.conclude(True)
        return run.conclude(None if pr.verdict == INCONCLUSIVE or norm.verdict == INCONCLUSIVE else False)
    if lhs < rhs and not is_connected(g):
        rep.notes.append("case (iii): smaller ratio on G and G disconnected")
        return run.conclude(True)
    return run.conclude(None if norm.verdict == INCONCLUSIVE else False)


@_guard
def verify_power_corollary(G: GraphLike, n: int, limits: Limits = DEFAULT_LIMITS) -> TheoremReport:
    """Non-bipartite vertex-transitive G with G^2 MIS-normal: G^n is MIS-normal
    (every maximum independent set a coordinate preimage) and IS-primitive."""
    g = _g(G)
    run = _Run("power_corollary")
    if not _vt(run, G, "G"):
        return run.stop()
    if not run.hyp("G non-bipartite", not is_bipartite(g)):
        return run.stop()
    if not run.hyp("n >= 3", n >= 3, f"n = {n}"):
        return run.stop()
    sq = check_product_normal(power(g, 2), limits)
    if not run.hyp("G^2 MIS-normal", {NORMAL: True, NOT_NORMAL: False}.get(sq.verdict), sq.verdict):
        return run.stop()
    P = power(g, n)
    norm = check_product_normal(P, limits)
    rep = run.report
    ag = solver.alpha(g, limits.budget_secs)
    rep.notes.append(
        f"alpha(G^{n}) = {norm.alpha_product} (alpha(G)|V|^{n - 1} = {ag * g.n ** (n - 1)}); "
        f"{norm.num_sets} maximum independent sets, tags {norm.tag_counts}"
    )
    if norm.verdict == NOT_NORMAL:
        rep.witnesses["mixed"] = norm.witness
        rep.products["mixed"] = P
        return run.conclude(False)
    if norm.verdict == INCONCLUSIVE:
        return run.conclude(None)
    prim = check_is_primitive(P, limits)
    rep.notes.append(f"G^{n}: {prim.verdict} ({prim.method})")
    if prim.verdict == IMPRIMITIVE:
        rep.witnesses["imprimitive"] = prim.witness
        rep.products["imprimitive"] = P
        return run.conclude(False)
    return run.conclude(True if prim.verdict == PRIMITIVE else None)


STATEMENTS = {
    "ratio-bound": (verify_ratio_bound, 1),
    "bipartite": (verify_bipartite_corollary, 1),
    "partition": (verify_imprimitive_partition, 1),
    "dichotomy": (verify_dichotomy, 2),
    "primitivity": (verify_primitivity_theorem, 2),
    "power": (verify_power_corollary, 1),
}


def diagonal_count_check(P: ProductGraph, res: solver.MisResult) -> bool:
    """r |V| = alpha |I| for a vertex-transitive graph with complete I(G)."""
    counts = solver.mis_membership_counts(P.graph if isinstance(P, ProductGraph) else P, res)
    r = counts[0] if counts else 0
    return all(c == r for c in counts) and r * len(counts) == res.alpha * res.num_sets


__all__ = [
    "DEFAULT_LIMITS",
    "Eq1Result",
    "Limits",
    "check_eq1",
    "check_is_primitive",
    "check_mis_normal",
    "check_product_normal",
    "classify_set",
    "independent_sets",
    "ratio",
    "verify_bipartite_corollary",
    "verify_dichotomy",
    "verify_imprimitive_partition",
    "verify_induced_ratio",
    "verify_power_corollary",
    "verify_primitivity_theorem",
    "verify_product_trichotomy",
    "verify_ratio_bound",
]
