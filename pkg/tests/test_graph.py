import itertools

import pytest
from hypothesis import given, settings

from misnormal import families as F
from misnormal.errors import (
    BadAxis,
    EmptySelection,
    IndexOutOfRange,
    LoopRejected,
    NotASquareProduct,
    SizeOverflow,
)
from misnormal.graph import (
    VertexSet,
    build_graph,
    closed_neighborhood,
    complement_closed_neighborhood,
    cylinder,
    diagonal_subgraph,
    direct_product,
    fiber,
    induced_subgraph,
    is_bipartite,
    is_connected,
    open_neighborhood,
    power,
    project,
)

from .strategies import graph_and_subset, graphs


def edge_set(G):
    return {frozenset(e) for e in G.edges()}


def test_build_graph_examples():
    K3 = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert K3.num_edges == 3
    assert build_graph(2, []).num_edges == 0
    assert build_graph(4, [(0, 1), (1, 0), (2, 3)]).num_edges == 2


def test_build_graph_errors():
    with pytest.raises(LoopRejected):
        build_graph(3, [(1, 1)])
    with pytest.raises(IndexOutOfRange):
        build_graph(3, [(0, 3)])


@given(graphs(max_n=9))
def test_graph_invariants(G):
    for u in range(G.n):
        assert not G.has_edge(u, u)
        assert G.rows[u] >> G.n == 0
        for v in range(G.n):
            assert G.has_edge(u, v) == G.has_edge(v, u)


def test_closed_neighborhood_examples(C5, two_K3):
    assert closed_neighborhood(C5, C5.vset([0])).to_list() == [0, 1, 4]
    assert not closed_neighborhood(C5, C5.vset([]))
    assert closed_neighborhood(two_K3, two_K3.vset([0])).to_list() == [0, 1, 2]
    assert open_neighborhood(C5, C5.vset([0])).to_list() == [1, 4]


def test_complement_closed_neighborhood_examples(C5, two_K3):
    assert complement_closed_neighborhood(two_K3, two_K3.vset([0])).to_list() == [3, 4, 5]
    assert complement_closed_neighborhood(C5, C5.vset([0])).to_list() == [2, 3]
    assert not complement_closed_neighborhood(C5, C5.vertices())


@given(graph_and_subset())
def test_closed_neighborhood_matches_scan(case):
    G, bits = case
    A = VertexSet(G.n, bits)
    expect = set(A) | {b for a in A for b in range(G.n) if G.has_edge(a, b)}
    assert set(closed_neighborhood(G, A)) == expect
    assert set(complement_closed_neighborhood(G, A)) == set(range(G.n)) - expect


def test_induced_subgraph_examples(C5, petersen):
    P, index = induced_subgraph(C5, C5.vset([0, 1, 2]))
    assert P.n == 3 and P.num_edges == 2 and index == {0: 0, 1: 1, 2: 2}
    K2, _ = induced_subgraph(F.generate("complete:4"), VertexSet(4, 0b11))
    assert K2.n == 2 and K2.num_edges == 1
    # outer 5-cycle 01-23-40-12-34, located by colex index
    subsets = [frozenset(c) for c in F.colex_subsets(5, 2)]
    rim = [subsets.index(frozenset(s)) for s in ({0, 1}, {2, 3}, {0, 4}, {1, 2}, {3, 4})]
    sub, _ = induced_subgraph(petersen, petersen.vset(rim))
    assert sub.num_edges == 5 and all(sub.degree(v) == 2 for v in range(5))
    assert is_connected(sub)
    with pytest.raises(EmptySelection):
        induced_subgraph(C5, C5.vset([]))


@given(graph_and_subset(min_n=1))
def test_induced_subgraph_respects_edges(case):
    G, bits = case
    if not bits:
        return
    sub, index = induced_subgraph(G, VertexSet(G.n, bits))
    for u, v in itertools.combinations(index, 2):
        assert sub.has_edge(index[u], index[v]) == G.has_edge(u, v)


def test_direct_product_examples(K2, K3, C4):
    P = direct_product(K2, K2)
    assert P.n == 4 and P.graph.num_edges == 2
    assert edge_set(P.graph) == {frozenset({0, 3}), frozenset({1, 2})}
    P = direct_product(K3, K3)
    assert (P.n, P.graph.num_edges) == (9, 18)
    P = direct_product(C4, K2)
    assert (P.n, P.graph.num_edges) == (8, 8)
    # two components, each a 4-cycle
    from misnormal.graph import components

    comps = components(P.graph)
    assert len(comps) == 2
    for comp in comps:
        sub, _ = induced_subgraph(P.graph, comp)
        assert sub.n == 4 and sub.num_edges == 4 and all(sub.degree(v) == 2 for v in range(4))


def brute_product_edges(G, H):
    out = set()
    for (a, b), (c, d) in itertools.product(itertools.product(range(G.n), range(H.n)), repeat=2):
        if G.has_edge(a, c) and H.has_edge(b, d):
            out.add(frozenset({a * H.n + b, c * H.n + d}))
    return out


@settings(max_examples=60)
@given(graphs(max_n=5), graphs(max_n=5))
def test_product_invariants(G, H):
    P = direct_product(G, H)
    assert P.n == G.n * H.n
    assert edge_set(P.graph) == brute_product_edges(G, H)
    assert P.graph.num_edges == 2 * G.num_edges * H.num_edges
    Q = direct_product(H, G)
    for (i, j), (k, l) in itertools.product(itertools.product(range(G.n), range(H.n)), repeat=2):
        assert P.graph.has_edge(i * H.n + j, k * H.n + l) == Q.graph.has_edge(j * G.n + i, l * G.n + k)


def test_product_size_cap(K3):
    with pytest.raises(SizeOverflow):
        direct_product(K3, K3, max_vertices=8)
    with pytest.raises(SizeOverflow):
        power(K3, 8)


def test_power_examples(K3, C5):
    assert power(K3, 2).graph == direct_product(K3, K3).graph
    P = power(C5, 3)
    assert P.n == 125 and P.factor_sizes == (5, 5, 5)
    assert P.graph.num_edges == 125 * 8 // 2
    assert power(C5, 1).graph == C5
    assert P.coords(P.index((1, 2, 3))) == (1, 2, 3)
    assert P.index((1, 2, 3)) == 1 * 25 + 2 * 5 + 3


def test_power_is_left_associated(C5, K3):
    P3 = power(K3, 3).graph
    left = direct_product(direct_product(K3, K3), K3).graph
    assert P3.rows == left.rows


def test_project_and_fiber(K2):
    P = direct_product(K2, K2)
    S = P.graph.vset([P.index((0, 0)), P.index((0, 1))])
    assert project(P, S, 0).to_list() == [0]
    D = P.graph.vset([P.index((0, 0)), P.index((1, 1))])
    assert project(P, D, 1).to_list() == [0, 1]
    assert not project(P, P.graph.vset([]), 0)
    assert fiber(P, 0, S).to_list() == [0, 1]
    assert not fiber(P, 1, S)
    assert fiber(P, 1, D).to_list() == [1]
    with pytest.raises(BadAxis):
        project(P, S, 2)
    with pytest.raises(IndexOutOfRange):
        fiber(P, 2, S)


@given(graphs(max_n=5), graphs(max_n=5), graphs(max_n=5).map(lambda g: g.n))
def test_cylinder_projection_identity(G, H, _):
    P = direct_product(G, H)
    for I in (0, 1, (1 << G.n) - 1, 0b101 & ((1 << G.n) - 1)):
        cyl = cylinder(P, 0, I)
        assert project(P, cyl, 0).bits == I if I else not cyl
        for a in range(G.n):
            expect = (1 << H.n) - 1 if (I >> a) & 1 else 0
            assert fiber(P, a, cyl).bits == expect


def test_diagonal_subgraph(K2, K3, C5):
    for G in (K3, C5, K2):
        diag, sub = diagonal_subgraph(direct_product(G, G))
        assert len(diag) == G.n
        assert sub.rows == G.rows  # u -> (u, u) is an isomorphism
    with pytest.raises(NotASquareProduct):
        diagonal_subgraph(direct_product(K2, K3))


def test_bipartite_connected(C5, C4, two_K3):
    assert not is_bipartite(C5) and is_connected(C5)
    assert is_bipartite(C4)
    assert not is_connected(two_K3)
    empty = build_graph(0, [])
    assert is_bipartite(empty) and is_connected(empty)
    assert not is_connected(build_graph(2, []))
