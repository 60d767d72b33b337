"""Naive 2^n reference for alpha and I(G).

Independent of the branch-and-bound kernels: all subsets are materialised as
integers in a numpy array and filtered edge by edge.  Only meant for graphs
of at most ~22 vertices.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph, VertexSet

MAX_ORACLE_VERTICES = 22


def independent_masks(G: Graph) -> np.ndarray:
    if G.n > MAX_ORACLE_VERTICES:
        raise ValueError(f"oracle limited to {MAX_ORACLE_VERTICES} vertices")
    masks = np.arange(1 << G.n, dtype=np.int64)
    ok = np.ones(masks.shape, dtype=bool)
    for u, v in G.edges():
        ok &= ((masks >> u) & (masks >> v) & 1) == 0
    return masks[ok]


def oracle_mis(G: Graph) -> tuple[int, list[VertexSet]]:
    """(alpha, all maximum independent sets in canonical order)."""
    masks = independent_masks(G)
    sizes = np.bitwise_count(masks.astype(np.uint64))
    a = int(sizes.max())
    sets = [VertexSet(G.n, int(m)) for m in masks[sizes == a]]
    return a, sorted(sets, key=VertexSet.sort_key)
