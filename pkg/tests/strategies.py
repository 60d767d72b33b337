"""Hypothesis strategies for small simple graphs."""

import itertools

from hypothesis import strategies as st

from misnormal.graph import build_graph


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def graph_and_subset(draw, min_n=1, max_n=8):
    G = draw(graphs(min_n, max_n))
    bits = draw(st.integers(0, (1 << G.n) - 1))
    return G, bits
