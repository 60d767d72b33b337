"""Automorphism groups by individualisation-refinement, orbits and block systems.

Permutations are plain tuples ``p`` with ``p[v]`` the image of ``v``.  The
refinement is colour refinement (neighbour counts per colour class) iterated
to a fixed point; it is used to prune the backtracking search, not to build a
canonical form, and every candidate map is checked edge by edge before it is
accepted as an automorphism.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np

from .errors import NotTransitive, OrbitTooLarge, TooLarge
from .graph import Graph, ProductGraph, VertexSet, iter_bits

Perm = tuple[int, ...]

DEFAULT_SEARCH_CAP = 64
DEFAULT_CLOSURE_CAP = 10**6
DEFAULT_ORBIT_CAP = 10**5


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """p after q."""
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


def apply_to_bits(p: Perm, bits: int) -> int:
    out = 0
    for v in iter_bits(bits):
        out |= 1 << p[v]
    return out


def is_automorphism(G: Graph, p: Perm) -> bool:
    """Edge-preservation biconditional over all pairs (rows compared as sets)."""
    if len(p) != G.n or not is_permutation(p):
        return False
    return all(apply_to_bits(p, G.rows[v]) == G.rows[p[v]] for v in range(G.n))


@dataclass
class PermGroup:
    degree: int
    generators: list[Perm]
    order: int | None = None
    _orbits: list[list[int]] | None = field(default=None, repr=False)
    _elements: list[Perm] | None = field(default=None, repr=False)

    def orbits(self) -> list[list[int]]:
        if self._orbits is None:
            parent = list(range(self.degree))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for g in self.generators:
                for v, w in enumerate(g):
                    a, b = find(v), find(w)
                    if a != b:
                        parent[max(a, b)] = min(a, b)
            classes: dict[int, list[int]] = {}
            for v in range(self.degree):
                classes.setdefault(find(v), []).append(v)
            self._orbits = sorted(classes.values())
        return self._orbits

    def is_transitive(self) -> bool:
        return self.degree <= 1 or len(self.orbits()) == 1

    def elements(self, cap: int = DEFAULT_CLOSURE_CAP) -> list[Perm]:
        """All group elements by closure under the generators."""
        if self._elements is None:
            if self.order is not None and self.order > cap:
                raise TooLarge(f"group order {self.order} above closure cap {cap}")
            e = identity(self.degree)
            seen = {e}
            frontier = [e]
            while frontier:
                nxt = []
                for x in frontier:
                    for g in self.generators:
                        y = compose(g, x)
                        if y not in seen:
                            seen.add(y)
                            nxt.append(y)
                            if len(seen) > cap:
                                raise TooLarge(f"group closure exceeds cap {cap}")
                frontier = nxt
            self._elements = sorted(seen)
            if self.order is None:
                self.order = len(seen)
        return self._elements


# -- refinement -------------------------------------------------------------


def _matrix(G: Graph) -> np.ndarray:
    A = np.zeros((G.n, G.n), dtype=np.int64)
    for v in range(G.n):
        A[v, list(iter_bits(G.rows[v]))] = 1
    return A


def _refine(A: np.ndarray, colors: np.ndarray) -> tuple[np.ndarray, list[bytes]]:
    """Equitable refinement; returns colours 0..k-1 and a trace of the splits."""
    n = colors.shape[0]
    trace = []
    while True:
        k = int(colors.max()) + 1 if n else 0
        onehot = np.zeros((n, k), dtype=np.int64)
        onehot[np.arange(n), colors] = 1
        sig = np.column_stack([colors, A @ onehot])
        uniq, inv = np.unique(sig, axis=0, return_inverse=True)
        inv = inv.reshape(-1)
        trace.append(uniq.tobytes())
        if uniq.shape[0] == k:
            return inv, trace
        colors = inv


def _individualize(colors: np.ndarray, v: int) -> np.ndarray:
    out = colors.copy()
    out[v] = int(colors.max()) + 1
    return out


def _first_open_cell(colors: np.ndarray) -> int | None:
    """Lowest vertex lying in a colour class with more than one member."""
    counts = np.bincount(colors)
    for v in range(colors.shape[0]):
        if counts[colors[v]] > 1:
            return v
    return None


def _extend(G: Graph, A: np.ndarray, src: np.ndarray, tgt: np.ndarray) -> Perm | None:
    src, tr_s = _refine(A, src)
    tgt, tr_t = _refine(A, tgt)
    if tr_s != tr_t:
        return None
    x = _first_open_cell(src)
    if x is None:
        where = {int(c): w for w, c in enumerate(tgt)}
        p = tuple(where[int(c)] for c in src)
        return p if is_automorphism(G, p) else None
    cell = int(src[x])
    src_x = _individualize(src, x)
    for y in np.flatnonzero(tgt == cell):
        found = _extend(G, A, src_x, _individualize(tgt, int(y)))
        if found is not None:
            return found
    return None


def automorphism_group(G: Graph, cap: int = DEFAULT_SEARCH_CAP) -> PermGroup:
    """Generators and order of Aut(G) via a stabiliser chain along a refinement base."""
    n = G.n
    if n > cap:
        raise TooLarge(f"automorphism search capped at {cap} vertices, graph has {n}")
    if n <= 1:
        return PermGroup(n, [], 1)
    A = _matrix(G)
    # base points and the individualised colourings leading to them
    prefixes = []
    colors, _ = _refine(A, np.zeros(n, dtype=np.int64))
    while True:
        b = _first_open_cell(colors)
        if b is None:
            break
        prefixes.append((b, colors))
        colors, _ = _refine(A, _individualize(colors, b))

    gens: list[Perm] = []
    order = 1
    for level in range(len(prefixes) - 1, -1, -1):
        b, colors = prefixes[level]
        candidates = [int(c) for c in np.flatnonzero(colors == colors[b])]
        orbit = _point_orbit(gens, b)
        src = _individualize(colors, b)
        for c in candidates:
            if c in orbit:
                continue
            p = _extend(G, A, src, _individualize(colors, c))
            if p is not None:
                gens.append(p)
                orbit = _point_orbit(gens, b)
        order *= len(orbit)
    return PermGroup(n, gens, order)


def _point_orbit(gens: list[Perm], b: int) -> set[int]:
    orbit = {b}
    frontier = [b]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g[x]
                if y not in orbit:
                    orbit.add(y)
                    nxt.append(y)
        frontier = nxt
    return orbit


# -- products ---------------------------------------------------------------


def product_group(P: ProductGraph, factor_groups: Sequence[PermGroup] | None = None) -> PermGroup:
    """Subgroup of Aut(P) generated by coordinatewise factor automorphisms.

    When all factors coincide, coordinate permutations are added as well.
    The order is left unknown.
    """
    factors = P.factors
    if factor_groups is None:
        factor_groups = [automorphism_group(f) for f in factors]
    coords = [P.coords(v) for v in range(P.n)]
    gens = []
    for axis, grp in enumerate(factor_groups):
        for g in grp.generators:
            gens.append(tuple(P.index(c[:axis] + (g[c[axis]],) + c[axis + 1 :]) for c in coords))
    if len(factors) > 1 and all(f == factors[0] for f in factors):
        k = len(factors)
        swaps = [(1, 0) + tuple(range(2, k))]
        if k > 2:
            swaps.append(tuple(range(1, k)) + (0,))
        for s in swaps:
            gens.append(tuple(P.index(tuple(c[s[i]] for i in range(k))) for c in coords))
    return PermGroup(P.n, gens, None)


def pair_automorphism(P: ProductGraph, gamma: Perm, tau: Perm) -> Perm:
    """The map (i, j) -> (gamma i, tau j) on a two-factor product."""
    return tuple(P.index((gamma[i], tau[j])) for i, j in (P.coords(v) for v in range(P.n)))


def known_group(X: Graph | ProductGraph, cap: int = DEFAULT_SEARCH_CAP) -> tuple[PermGroup, bool]:
    """Aut(X) when searchable, else the product subgroup; the flag says whether it is all of Aut(X)."""
    G = X.graph if isinstance(X, ProductGraph) else X
    if G.n <= cap:
        return automorphism_group(G, cap), True
    if isinstance(X, ProductGraph):
        return product_group(X), False
    raise TooLarge(f"no automorphism group available for a {G.n}-vertex graph")


# -- transitivity and primitivity ------------------------------------------

GroupLike = Union[Graph, ProductGraph, PermGroup]


def _as_group(X: GroupLike) -> PermGroup:
    if isinstance(X, PermGroup):
        return X
    return known_group(X)[0]


def is_vertex_transitive(X: Graph | ProductGraph) -> bool:
    """Single point orbit.  For products above the search cap a transitive subgroup certifies it."""
    G = X.graph if isinstance(X, ProductGraph) else X
    grp, _ = known_group(X)
    if grp.is_transitive():
        return True
    if G.n > DEFAULT_SEARCH_CAP:
        raise TooLarge("subgroup not transitive; full group unavailable at this size")
    return False


def minimal_block(group: PermGroup, v: int, base: int = 0) -> list[int]:
    """Smallest block containing ``base`` and ``v`` (Atkinson's union-find closure)."""
    n = group.degree
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        a, b = find(a), find(b)
        if a == b:
            return False
        parent[max(a, b)] = min(a, b)
        return True

    union(base, v)
    queue = [(base, v)]
    while queue:
        a, b = queue.pop()
        for g in group.generators:
            x, y = g[a], g[b]
            if union(x, y):
                queue.append((x, y))
    root = find(base)
    return [x for x in range(n) if find(x) == root]


def nontrivial_block(X: GroupLike) -> list[int] | None:
    """A proper block of size > 1 containing 0, or None when the group is primitive."""
    group = _as_group(X)
    if not group.is_transitive():
        raise NotTransitive("primitivity is defined for transitive groups")
    n = group.degree
    for v in range(1, n):
        block = minimal_block(group, v)
        if len(block) < n:
            return block
    return None


def is_primitive_group(X: GroupLike) -> bool:
    return nontrivial_block(X) is None


def set_orbit(group: PermGroup, B: VertexSet, cap: int = DEFAULT_ORBIT_CAP) -> list[VertexSet]:
    """Images of B under the group generated by ``group.generators``, canonically ordered."""
    if not B:
        raise ValueError("set orbit of the empty set")
    seen = {B.bits}
    frontier = [B.bits]
    while frontier:
        nxt = []
        for bits in frontier:
            for g in group.generators:
                img = apply_to_bits(g, bits)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
                    if len(seen) > cap:
                        raise OrbitTooLarge(f"set orbit exceeds {cap} members")
        frontier = nxt
    return sorted((VertexSet(B.n, b) for b in seen), key=VertexSet.sort_key)


def is_set_partition(orbit: Sequence[VertexSet], n: int) -> bool:
    """Members pairwise disjoint and covering 0..n-1."""
    if not orbit:
        raise ValueError("empty orbit")
    union = 0
    for s in orbit:
        if union & s.bits:
            return False
        union |= s.bits
    return union == (1 << n) - 1


def brute_force_automorphisms(G: Graph) -> list[Perm]:
    """Every automorphism by trying all n! permutations; a test oracle for tiny graphs."""
    return [p for p in itertools.permutations(range(G.n)) if is_automorphism(G, p)]
