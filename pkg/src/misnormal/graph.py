"""Immutable simple graphs over bitset rows, direct products and projections.

Vertex sets are Python ints used as bitsets (bit ``v`` set means vertex ``v``
belongs to the set); the adjacency rows are additionally kept as a
``(n, words)`` uint64 matrix for the compiled kernels.

Product vertices use row-major coordinates: ``(i, j)`` in ``G x H`` is
``i * |V(H)| + j``, and ``G^n`` is built left-associatively so that the
coordinates ``(x_1, ..., x_n)`` map to the mixed-radix number
``x_1 x_2 ... x_n``.
"""

from __future__ import annotations

import math
import os
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np

from ._accel import int_to_words, words_for
from .errors import (
    BadAxis,
    EmptySelection,
    IndexOutOfRange,
    LoopRejected,
    NotASquareProduct,
    SizeOverflow,
)

DEFAULT_VERTEX_CAP = int(os.environ.get("MISNORMAL_MAX_VERTICES", "4096"))

Ratio = Fraction


def fmt_ratio(r: Fraction) -> str:
    return f"{r.numerator}/{r.denominator}"


def iter_bits(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def bits_of(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices ``0..n-1`` of one graph."""

    n: int
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.n:
            raise IndexOutOfRange(f"vertex set exceeds width {self.n}")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        vs = list(vertices)
        for v in vs:
            if not 0 <= v < n:
                raise IndexOutOfRange(f"vertex {v} not in 0..{n - 1}")
        return cls(n, bits_of(vs))

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __contains__(self, v: int) -> bool:
        return v >= 0 and (self.bits >> v) & 1 == 1

    def __bool__(self) -> bool:
        return self.bits != 0

    def _same(self, other: "VertexSet") -> None:
        if self.n != other.n:
            raise ValueError("vertex sets belong to graphs of different order")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._same(other)
        return VertexSet(self.n, self.bits | other.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._same(other)
        return VertexSet(self.n, self.bits & other.bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._same(other)
        return VertexSet(self.n, self.bits & ~other.bits)

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.bits)

    def issubset(self, other: "VertexSet") -> bool:
        return self.bits & ~other.bits == 0

    def to_list(self) -> list[int]:
        return list(iter_bits(self.bits))

    def sort_key(self) -> tuple[int, ...]:
        """Canonical order: lexicographic on the sorted vertex list."""
        return tuple(iter_bits(self.bits))

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()})"


class Graph:
    """Simple loopless undirected graph; immutable after construction."""

    __slots__ = ("n", "rows", "label", "_adj", "_key")

    def __init__(self, n: int, rows: Sequence[int], label: str | None = None):
        self.n = n
        self.rows = tuple(rows)
        self.label = label
        self._adj = None
        self._key = None

    @property
    def adj(self) -> np.ndarray:
        """Read-only ``(n, words)`` uint64 adjacency matrix."""
        if self._adj is None:
            nw = words_for(self.n)
            a = np.zeros((self.n, nw), dtype=np.uint64)
            for v, row in enumerate(self.rows):
                a[v] = int_to_words(row, nw)
            a.setflags(write=False)
            self._adj = a
        return self._adj

    def key(self) -> tuple[int, tuple[int, ...]]:
        return (self.n, self.rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.key() == other.key()

    def __hash__(self) -> int:
        if self._key is None:
            self._key = hash(self.key())
        return self._key

    def __repr__(self) -> str:
        name = f" {self.label}" if self.label else ""
        return f"<Graph{name} n={self.n} m={self.num_edges}>"

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return (self.rows[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def vset(self, vertices: Iterable[int]) -> VertexSet:
        return VertexSet.of(self.n, vertices)

    def is_independent(self, s: VertexSet | int) -> bool:
        bits = s.bits if isinstance(s, VertexSet) else s
        for v in iter_bits(bits):
            if self.rows[v] & bits:
                return False
        return True

    def independence_ratio(self, alpha: int) -> Fraction:
        return Fraction(alpha, self.n) if self.n else Fraction(1)


@dataclass(frozen=True)
class ProductGraph:
    """A direct product together with its factors and coordinate convention."""

    graph: Graph
    factors: tuple[Graph, ...]

    @property
    def factor_sizes(self) -> tuple[int, ...]:
        return tuple(f.n for f in self.factors)

    @property
    def n(self) -> int:
        return self.graph.n

    def coords(self, v: int) -> tuple[int, ...]:
        out = []
        for size in reversed(self.factor_sizes):
            v, r = divmod(v, size)
            out.append(r)
        return tuple(reversed(out))

    def index(self, coords: Sequence[int]) -> int:
        v = 0
        for c, size in zip(coords, self.factor_sizes):
            if not 0 <= c < size:
                raise IndexOutOfRange(f"coordinate {c} not in 0..{size - 1}")
            v = v * size + c
        return v


def build_graph(n: int, edges: Iterable[tuple[int, int]], label: str | None = None) -> Graph:
    if n < 0:
        raise IndexOutOfRange("vertex count must be nonnegative")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise LoopRejected(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows, label)


def _bits(G: Graph, A: VertexSet | int) -> int:
    if isinstance(A, VertexSet):
        if A.n != G.n:
            raise ValueError(f"vertex set of width {A.n} used with graph of order {G.n}")
        return A.bits
    return A


def open_neighborhood(G: Graph, A: VertexSet | int) -> VertexSet:
    out = 0
    for a in iter_bits(_bits(G, A)):
        out |= G.rows[a]
    return VertexSet(G.n, out)


def closed_neighborhood(G: Graph, A: VertexSet | int) -> VertexSet:
    bits = _bits(G, A)
    return VertexSet(G.n, open_neighborhood(G, bits).bits | bits)


def complement_closed_neighborhood(G: Graph, A: VertexSet | int) -> VertexSet:
    return closed_neighborhood(G, A).complement()


def induced_subgraph(G: Graph, B: VertexSet | int) -> tuple[Graph, dict[int, int]]:
    """Subgraph on B relabelled to 0..|B|-1 in increasing order; returns (graph, old->new)."""
    bits = _bits(G, B)
    if not bits:
        raise EmptySelection("induced subgraph of an empty vertex set")
    old = list(iter_bits(bits))
    index = {v: i for i, v in enumerate(old)}
    rows = []
    for v in old:
        rows.append(bits_of(index[u] for u in iter_bits(G.rows[v] & bits)))
    return Graph(len(old), rows, None), index


def _check_cap(n: int, max_vertices: int | None) -> None:
    cap = DEFAULT_VERTEX_CAP if max_vertices is None else max_vertices
    if n > cap:
        raise SizeOverflow(f"product has {n} vertices, above the cap of {cap}")


def _factor(X: Graph | ProductGraph) -> Graph:
    return X.graph if isinstance(X, ProductGraph) else X


def _product_rows(G: Graph, H: Graph) -> list[int]:
    m = H.n
    # spread[j-row of H] placed at block i: bits i*m + j
    rows = []
    for i in range(G.n):
        for j in range(m):
            hrow = H.rows[j]
            row = 0
            for k in iter_bits(G.rows[i]):
                row |= hrow << (k * m)
            rows.append(row)
    return rows


def direct_product(G: Graph | ProductGraph, H: Graph | ProductGraph, max_vertices: int | None = None) -> ProductGraph:
    """Two-factor direct product; product-graph arguments act as single factors."""
    G, H = _factor(G), _factor(H)
    if G.n == 0 or H.n == 0:
        raise EmptySelection("direct product needs nonempty factors")
    _check_cap(G.n * H.n, max_vertices)
    label = f"{G.label or 'G'} x {H.label or 'H'}"
    return ProductGraph(Graph(G.n * H.n, _product_rows(G, H), label), (G, H))


def power(G: Graph, n: int, max_vertices: int | None = None) -> ProductGraph:
    if n < 1:
        raise ValueError("power exponent must be positive")
    if G.n == 0:
        raise EmptySelection("power of the null graph")
    _check_cap(G.n**n, max_vertices)
    acc = G
    for _ in range(n - 1):
        acc = Graph(acc.n * G.n, _product_rows(acc, G))
    label = f"{G.label or 'G'}^{n}" if n > 1 else G.label
    return ProductGraph(Graph(acc.n, acc.rows, label), (G,) * n)


def product_of(factors: Sequence[Graph], max_vertices: int | None = None) -> ProductGraph:
    """Left-associated product of several (possibly different) factors."""
    if not factors:
        raise ValueError("need at least one factor")
    _check_cap(math.prod(f.n for f in factors), max_vertices)
    acc = factors[0]
    for f in factors[1:]:
        acc = Graph(acc.n * f.n, _product_rows(acc, f))
    label = " x ".join(f.label or "G" for f in factors)
    return ProductGraph(Graph(acc.n, acc.rows, label), tuple(factors))


def project(P: ProductGraph, S: VertexSet | int, axis: int) -> VertexSet:
    """Coordinates on factor ``axis`` occurring in S."""
    sizes = P.factor_sizes
    if not 0 <= axis < len(sizes):
        raise BadAxis(f"axis {axis} not in 0..{len(sizes) - 1}")
    out = 0
    for v in iter_bits(_bits(P.graph, S)):
        out |= 1 << P.coords(v)[axis]
    return VertexSet(sizes[axis], out)


def fiber(P: ProductGraph, a: int, S: VertexSet | int) -> VertexSet:
    """Second coordinates paired with first coordinate ``a`` in S (two-factor products)."""
    if len(P.factors) != 2:
        raise BadAxis("fiber is defined for two-factor products")
    g, h = P.factor_sizes
    if not 0 <= a < g:
        raise IndexOutOfRange(f"vertex {a} not in 0..{g - 1}")
    bits = _bits(P.graph, S)
    return VertexSet(h, (bits >> (a * h)) & ((1 << h) - 1))


def cylinder(P: ProductGraph, axis: int, I: VertexSet | int) -> VertexSet:
    """Preimage of I under the projection onto factor ``axis``."""
    ibits = I.bits if isinstance(I, VertexSet) else I
    out = 0
    for v in range(P.n):
        if (ibits >> P.coords(v)[axis]) & 1:
            out |= 1 << v
    return VertexSet(P.n, out)


def diagonal_subgraph(P: ProductGraph) -> tuple[VertexSet, Graph]:
    if len(P.factors) != 2 or P.factors[0] != P.factors[1]:
        raise NotASquareProduct("diagonal needs a product of a graph with itself")
    m = P.factors[0].n
    diag = VertexSet(P.n, bits_of(u * m + u for u in range(m)))
    sub, _ = induced_subgraph(P.graph, diag)
    return diag, sub


def _bfs_colors(G: Graph) -> tuple[list[int], bool]:
    color = [-1] * G.n
    bipartite = True
    for s in range(G.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in iter_bits(G.rows[u]):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    bipartite = False
    return color, bipartite


def is_bipartite(G: Graph) -> bool:
    return _bfs_colors(G)[1]


def components(G: Graph) -> list[int]:
    """Vertex bitsets of the connected components, ordered by least vertex."""
    seen = 0
    comps = []
    for s in range(G.n):
        if (seen >> s) & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= G.rows[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(components(G)) == 1
