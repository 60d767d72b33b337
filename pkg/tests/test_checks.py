import itertools
import json
from fractions import Fraction

import pytest

from misnormal import families as F
from misnormal import solver
from misnormal.checks import (
    Limits,
    check_eq1,
    check_is_primitive,
    check_mis_normal,
    check_product_normal,
    ratio,
    verify_bipartite_corollary,
    verify_dichotomy,
    verify_imprimitive_partition,
    verify_induced_ratio,
    verify_power_corollary,
    verify_primitivity_theorem,
    verify_product_trichotomy,
    verify_ratio_bound,
)
from misnormal.errors import NotTransitive
from misnormal.graph import VertexSet, build_graph, closed_neighborhood, diagonal_subgraph, direct_product, power
from misnormal.oracle import oracle_mis
from misnormal.reports import dumps


def naive_preimage_axis(G, H, S):
    """0 if S = I x V(H), 1 if S = V(G) x J, with I, J maximum independent; else None."""
    verts = {(v // H.n, v % H.n) for v in S}
    aG, IG = oracle_mis(G)
    aH, IH = oracle_mis(H)
    for I in IG:
        if verts == {(a, b) for a in I for b in range(H.n)}:
            return 0
    for J in IH:
        if verts == {(a, b) for a in range(G.n) for b in J}:
            return 1
    return None


def independent_witness_ok(G, A, a):
    """Recheck |A| < alpha and |A| |V| = alpha |N[A]| from raw adjacency."""
    members = list(A)
    if not members or len(members) >= a:
        return False
    if any(G.has_edge(u, v) for u, v in itertools.combinations(members, 2)):
        return False
    closed = set(members) | {w for u in members for w in range(G.n) if G.has_edge(u, w)}
    return len(members) * G.n == a * len(closed)


@pytest.mark.parametrize(
    "g, h, expect",
    [("cycle:5", "cycle:5", (10, 10, True)), ("complete:3", "complete:3", (3, 3, True)),
     ("complete:2", "complete:2", (2, 2, True)), ("kneser:5,2", "cycle:4", (20, 20, True))],
)
def test_eq1_examples(g, h, expect):
    r = check_eq1(F.generate(g), F.generate(h), certify=True)
    assert (r.alpha_product, r.eq1_value, r.equal) == expect


def test_eq1_certify_requires_transitivity(P3, K3):
    with pytest.raises(NotTransitive):
        check_eq1(P3, K3, certify=True)


def test_normality_k3_k3(K3):
    rep = check_mis_normal(K3, K3)
    assert rep.verdict == "normal" and rep.num_sets == 6
    assert rep.tag_counts == {"G_type": 3, "H_type": 3}


def test_normality_c5_c5(C5):
    rep = check_mis_normal(C5, C5)
    assert rep.verdict == "normal" and rep.num_sets == 10 and rep.alpha_product == 10


def test_c4_k2_all_sets_are_product_form(C4, K2):
    # C4 x K2 is two 4-cycles; each MIS takes a full colour class from both,
    # which is always I x V(K2) or V(C4) x J
    P = direct_product(C4, K2)
    a, sets = oracle_mis(P.graph)
    assert a == 4 and len(sets) == 4
    axes = sorted(naive_preimage_axis(C4, K2, S) for S in sets)
    assert axes == [0, 0, 1, 1]
    rep = check_product_normal(P)
    assert rep.verdict == "normal" and rep.tag_counts == {"G_type": 2, "H_type": 2}


def test_not_normal_demo(two_K3, K3):
    rep = check_mis_normal(two_K3, K3)
    assert rep.verdict == "not_normal"
    assert rep.witness.to_list() == [0, 1, 2, 9, 12, 15]
    assert naive_preimage_axis(two_K3, K3, rep.witness) is None
    assert rep.tag_counts["mixed"] == 24


@pytest.mark.parametrize("g, h", [("cycle:5", "cycle:5"), ("complete:3", "cycle:4"), ("copies:2xcomplete:3", "complete:3"),
                                  ("complete:2", "complete:3"), ("cycle:4", "complete:2")])
def test_normal_tags_match_naive_classifier(g, h):
    G, H = F.generate(g), F.generate(h)
    rep = check_mis_normal(G, H)
    naive = [naive_preimage_axis(G, H, S) for S in solver.enumerate_mis(direct_product(G, H).graph).sets]
    assert rep.classified == [("G_type", "H_type")[x] if x is not None else "mixed" for x in naive]
    swapped = check_mis_normal(H, G)
    assert swapped.verdict == rep.verdict and swapped.num_sets == rep.num_sets


def test_normality_inconclusive_on_cap(K3):
    rep = check_mis_normal(K3, K3, Limits(max_sets=2))
    assert rep.verdict == "inconclusive" and not rep.complete


@pytest.mark.parametrize("spec", ["complete:3", "cycle:5", "cycle:7", "kneser:5,2"])
def test_primitive_examples(spec):
    assert check_is_primitive(F.generate(spec)).verdict == "primitive"


def test_primitive_products(K3, C5):
    assert check_is_primitive(direct_product(K3, K3)).verdict == "primitive"
    assert check_is_primitive(direct_product(C5, C5)).verdict == "primitive"


def test_imprimitive_examples(two_K3, K2):
    rep = check_is_primitive(two_K3)
    assert rep.verdict == "imprimitive"
    assert rep.witness.to_list() == [0]
    assert rep.witness_closed_neighborhood.to_list() == [0, 1, 2]
    assert independent_witness_ok(two_K3, rep.witness, rep.alpha)
    P = direct_product(K2, K2)
    rep = check_is_primitive(P)
    assert rep.verdict == "imprimitive" and rep.witness.to_list() == [0]
    assert independent_witness_ok(P.graph, rep.witness, rep.alpha)


@pytest.mark.parametrize("spec", ["cycle:6", "cycle:8", "circulant:8,1+4", "copies:3xcomplete:2", "kneser:6,2", "circulant:12,1+5"])
def test_primitivity_against_exhaustive_scan(spec):
    G = F.generate(spec)
    a, _ = oracle_mis(G)
    exhaustive = any(
        independent_witness_ok(G, c, a)
        for k in range(1, a)
        for c in itertools.combinations(range(G.n), k)
    )
    rep = check_is_primitive(G, use_group=False)
    assert rep.verdict == ("imprimitive" if exhaustive else "primitive")
    if exhaustive:
        assert independent_witness_ok(G, rep.witness, a)
        assert independent_witness_ok(G, rep.max_imprimitive, a)


def test_group_route_matches_scan(C5):
    cube = power(C5, 3)
    rep = check_is_primitive(cube)
    assert rep.verdict == "primitive" and rep.method == "primitive_automorphism_group"
    rep = check_is_primitive(cube, use_group=False)
    assert rep.verdict == "inconclusive"


def test_ratio_bound(C5, two_K3, K2):
    assert verify_ratio_bound(C5).status == "verified"
    rep = verify_ratio_bound(two_K3)
    assert rep.status == "verified" and rep.witnesses["equality_example"].to_list() == [0]
    assert verify_ratio_bound(K2).status == "verified"
    assert verify_ratio_bound(build_graph(3, [(0, 1), (1, 2)])).status == "hypothesis_not_met"


def test_induced_ratio(C5, two_K3):
    assert verify_induced_ratio(C5, closed_neighborhood(C5, C5.vset([0]))).status == "verified"
    assert verify_induced_ratio(two_K3, two_K3.vset([0, 1, 2])).status == "verified"
    assert verify_induced_ratio(C5, C5.vertices()).status == "verified"


@pytest.mark.parametrize("spec, r", [("cycle:4", Fraction(1, 2)), ("cycle:5", Fraction(2, 5)), ("kneser:5,2", Fraction(2, 5))])
def test_bipartite_corollary(spec, r):
    G = F.generate(spec)
    assert ratio(G) == r
    assert verify_bipartite_corollary(G).status == "verified"


def test_imprimitive_partition(two_K3, K2, C5):
    rep = verify_imprimitive_partition(two_K3)
    assert rep.status == "verified"
    assert rep.witnesses["A"].to_list() == [0] and rep.witnesses["B"].to_list() == [3, 4, 5]
    rep = verify_imprimitive_partition(direct_product(K2, K2))
    assert rep.status == "verified" and len(rep.witnesses["B"]) == 2
    assert verify_imprimitive_partition(C5).status == "hypothesis_not_met"


def test_dichotomy(K2, K3, C5):
    assert verify_dichotomy(K2, K2).status == "verified"
    assert verify_dichotomy(K3, K3).status == "hypothesis_not_met"
    assert verify_dichotomy(C5, C5).status == "hypothesis_not_met"


def test_primitivity_theorem(K3, C5, C4):
    assert verify_primitivity_theorem(K3, K3).status == "verified"
    assert verify_primitivity_theorem(C5, C5).status == "verified"
    assert verify_primitivity_theorem(C4, C4).status == "hypothesis_not_met"


def test_trichotomy(K3, two_K3):
    sq = direct_product(K3, K3)
    diag, _ = diagonal_subgraph(sq)
    rep = verify_product_trichotomy(sq, diag, K3)
    assert rep.status == "verified" and "case (i)" in " ".join(rep.notes)
    rep = verify_product_trichotomy(two_K3, two_K3.vset([0, 1, 2]), K3)
    assert rep.status == "verified" and "case (ii)" in " ".join(rep.notes)


def test_power_corollary_small(K3, C4):
    rep = verify_power_corollary(K3, 3)
    assert rep.status == "verified" and "9 maximum independent sets" in " ".join(rep.notes)
    assert verify_power_corollary(C4, 3).status == "hypothesis_not_met"
    assert verify_power_corollary(K3, 2).status == "hypothesis_not_met"


def test_reports_are_json_and_deterministic(two_K3, K3):
    a = dumps(check_mis_normal(two_K3, K3))
    b = dumps(check_mis_normal(two_K3, K3))
    assert a == b
    data = json.loads(a)
    assert data["verdict"] == "not_normal"
    assert "timings" not in data


def test_corpus_never_violated():
    for spec, G in F.corpus(9):
        for rep in (verify_ratio_bound(G), verify_bipartite_corollary(G)):
            assert rep.status in ("verified", "hypothesis_not_met"), (spec, rep.statement)
