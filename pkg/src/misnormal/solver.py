"""Exact maximum independent sets: alpha(G), I(G), and per-vertex counts.

Both searches drive :func:`misnormal._kernels.bb_run`, an include/exclude
branch and bound that branches on a maximum residual-degree vertex (lowest
index on ties) and prunes with a clique / 5-cycle cover bound.  Enumeration
reruns the search with the target fixed at alpha and keeps every leaf of that
size, so the include and exclude subtrees never report a set twice.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from . import _kernels as K
from ._accel import words_for, words_to_int
from .errors import CapExceeded, IncompleteEnumeration, Timeout
from .graph import Graph, VertexSet, iter_bits

DEFAULT_MAX_SETS = 100_000
DEFAULT_SUBSET_CAP = 1 << 22
CHUNK_NODES = 20_000


def default_budget() -> float:
    return float(os.environ.get("MISNORMAL_BUDGET_SECS", "600"))


@dataclass(frozen=True)
class MisResult:
    alpha: int
    sets: tuple[VertexSet, ...]
    complete: bool

    @property
    def num_sets(self) -> int:
        return len(self.sets)


@dataclass
class SearchStats:
    nodes: int = 0
    seconds: float = 0.0
    chunks: int = 0
    extra: dict = field(default_factory=dict)


_alpha_cache: dict[Graph, tuple[int, int]] = {}
_mis_cache: dict[Graph, MisResult] = {}
_CACHE_LIMIT = 512


def clear_caches() -> None:
    _alpha_cache.clear()
    _mis_cache.clear()


def _remember(cache: dict, key, value) -> None:
    if len(cache) >= _CACHE_LIMIT:
        cache.pop(next(iter(cache)))
    cache[key] = value


def _run(G: Graph, enum: bool, target: int, max_sets: int, budget_secs: float | None, stats: SearchStats | None):
    n = G.n
    nw = words_for(n)
    adj = G.adj
    Rs, Ss, ks, vs, st, ctr, (deg, U, nb, X, Y) = K.new_search_state(n, nw)
    if enum:
        sols = np.zeros((min(max_sets, 256), nw), dtype=np.uint64)
    else:
        sols = np.zeros((1, nw), dtype=np.uint64)
        R0 = Rs[0].copy()
        ctr[1] = K.greedy_independent(adj, R0, sols[0], deg)
    budget = default_budget() if budget_secs is None else budget_secs
    start = time.monotonic()
    complete = True
    chunks = 0
    while True:
        chunks += 1
        status = K.bb_run(adj, Rs, Ss, ks, vs, st, ctr, enum, target, sols, CHUNK_NODES, deg, U, nb, X, Y)
        if status == K.DONE:
            break
        if status == K.FULL:
            if sols.shape[0] >= max_sets:
                complete = False
                break
            grown = np.zeros((min(2 * sols.shape[0], max_sets), nw), dtype=np.uint64)
            grown[: sols.shape[0]] = sols
            sols = grown
        if time.monotonic() - start > budget:
            raise Timeout(f"search on {n} vertices exceeded {budget:g} s after {int(ctr[3])} nodes")
    if stats is not None:
        stats.nodes += int(ctr[3])
        stats.seconds += time.monotonic() - start
        stats.chunks += chunks
    return int(ctr[1]), sols[: int(ctr[2]) if enum else 1], complete


def alpha_with_witness(G: Graph, budget_secs: float | None = None, stats: SearchStats | None = None) -> tuple[int, VertexSet]:
    cached = _alpha_cache.get(G)
    if cached is not None and stats is None:
        return cached[0], VertexSet(G.n, cached[1])
    if G.n == 0:
        return 0, VertexSet(0, 0)
    best, sols, _ = _run(G, False, 0, 1, budget_secs, stats)
    bits = words_to_int(sols[0])
    _remember(_alpha_cache, G, (best, bits))
    return best, VertexSet(G.n, bits)


def alpha(G: Graph, budget_secs: float | None = None) -> int:
    """Independence number; an edgeless graph gives n."""
    return alpha_with_witness(G, budget_secs)[0]


def maximum_independent_set(G: Graph, budget_secs: float | None = None) -> VertexSet:
    return alpha_with_witness(G, budget_secs)[1]


def enumerate_mis(
    G: Graph,
    max_sets: int = DEFAULT_MAX_SETS,
    budget_secs: float | None = None,
    stats: SearchStats | None = None,
) -> MisResult:
    """All maximum independent sets in canonical order (lexicographic sorted vertex lists).

    If more than ``max_sets`` exist the result holds the first ``max_sets``
    found and ``complete`` is False.
    """
    cached = _mis_cache.get(G)
    if cached is not None and stats is None and cached.num_sets <= max_sets:
        return cached
    if G.n == 0:
        return MisResult(0, (VertexSet(0, 0),), True)
    start = time.monotonic()
    a = alpha(G, budget_secs)
    left = None if budget_secs is None else max(budget_secs - (time.monotonic() - start), 0.0)
    _, sols, complete = _run(G, True, a, max_sets, left, stats)
    sets = sorted((VertexSet(G.n, words_to_int(row)) for row in sols), key=VertexSet.sort_key)
    result = MisResult(a, tuple(sets), complete)
    if complete:
        _remember(_mis_cache, G, result)
    return result


def mis_membership_counts(G: Graph, result: MisResult) -> list[int]:
    """r(v) = number of maximum independent sets containing v."""
    if not result.complete:
        raise IncompleteEnumeration("membership counts need the full family I(G)")
    counts = [0] * G.n
    for s in result.sets:
        for v in s:
            counts[v] += 1
    return counts


def iter_subsets_of(S: VertexSet) -> Iterator[VertexSet]:
    """Nonempty subsets of S, by increasing size then lexicographically."""
    members = S.to_list()
    from itertools import combinations

    for k in range(1, len(members) + 1):
        for combo in combinations(members, k):
            bits = 0
            for v in combo:
                bits |= 1 << v
            yield VertexSet(S.n, bits)


def enumerate_independent_subsets_of(
    G: Graph,
    S: VertexSet,
    predicate: Callable[[VertexSet], bool] | None = None,
    cap: int = DEFAULT_SUBSET_CAP,
) -> list[VertexSet]:
    """Subsets of the independent set S (all independent) accepted by ``predicate``."""
    if not G.is_independent(S):
        raise ValueError("S must be independent")
    if (1 << len(S)) - 1 > cap:
        raise CapExceeded(f"{(1 << len(S)) - 1} subsets exceed the cap of {cap}")
    return [A for A in iter_subsets_of(S) if predicate is None or predicate(A)]


def imprimitive_subsets_within(G: Graph, S: VertexSet, alpha_g: int, cap: int = 4096) -> tuple[int, int, list[int]]:
    """Kernel scan of A inside S with |A| < alpha and |A| |V| = alpha |N[A]|.

    Returns ``(found, scanned, witnesses)`` where ``witnesses`` holds the first
    ``cap`` hits as bitsets.
    """
    nw = words_for(G.n)
    members = np.array(S.to_list(), dtype=np.int64)
    closed = np.array(G.adj, copy=True)
    for v in range(G.n):
        closed[v, v >> 6] |= np.uint64(1) << np.uint64(v & 63)
    m = members.shape[0]
    out = np.zeros((max(cap, 1), nw), dtype=np.uint64)
    A = np.zeros((m + 1, nw), dtype=np.uint64)
    NA = np.zeros((m + 1, nw), dtype=np.uint64)
    nxt = np.zeros(m + 1, dtype=np.int64)
    found, scanned = K.imprimitive_scan(closed, members, alpha_g, G.n, out, A, NA, nxt)
    found, scanned = int(found), int(scanned)
    return found, scanned, [words_to_int(out[i]) for i in range(min(found, cap))]


__all__ = [
    "MisResult",
    "SearchStats",
    "alpha",
    "alpha_with_witness",
    "clear_caches",
    "enumerate_independent_subsets_of",
    "enumerate_mis",
    "imprimitive_subsets_within",
    "iter_bits",
    "iter_subsets_of",
    "maximum_independent_set",
    "mis_membership_counts",
]
