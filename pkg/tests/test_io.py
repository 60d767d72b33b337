import networkx as nx
import pytest
from hypothesis import given

from misnormal import families as F
from misnormal.errors import FormatError
from misnormal.graph import build_graph
from misnormal.io import from_edge_list, from_graph6, read_graph, to_edge_list, to_graph6, write_graph

from .strategies import graphs


def to_nx(G):
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(G.edges())
    return g


@pytest.mark.parametrize("spec", ["cycle:5", "kneser:5,2", "complete:8", "copies:2xcomplete:3", "kneser:7,3"])
def test_graph6_matches_networkx(spec):
    G = F.generate(spec)
    assert to_graph6(G) == nx.to_graph6_bytes(to_nx(G), header=False).decode().strip()


def test_graph6_large_order_encoding():
    G = build_graph(70, [(0, 69), (5, 6)])
    text = to_graph6(G)
    assert text[0] == "~"
    assert text == nx.to_graph6_bytes(to_nx(G), header=False).decode().strip()
    assert from_graph6(text) == G


def test_graph6_known_strings():
    assert to_graph6(build_graph(0, [])) == "?"
    assert to_graph6(F.generate("complete:3")) == "Bw"
    assert from_graph6(">>graph6<<Bw") == F.generate("complete:3")


@given(graphs(min_n=0, max_n=12))
def test_graph6_roundtrip(G):
    assert from_graph6(to_graph6(G)) == G
    assert from_edge_list(to_edge_list(G)) == G


def test_graph6_rejects_bad_input():
    with pytest.raises(FormatError):
        from_graph6("Bww")
    with pytest.raises(FormatError):
        from_graph6("B ")
    with pytest.raises(FormatError):
        from_graph6("~A")


def test_edge_list_format(tmp_path):
    G = F.generate("cycle:4")
    assert to_edge_list(G).splitlines()[0] == "4 4"
    with pytest.raises(FormatError):
        from_edge_list("3 2\n0 1\n")
    with pytest.raises(FormatError):
        from_edge_list("3 1\n0 1 2\n")
    for name in ("c4.g6", "c4.txt"):
        write_graph(G, tmp_path / name)
        assert read_graph(tmp_path / name) == G
