"""Named vertex-transitive families and the fixed test corpus.

Spec strings (CLI syntax)::

    cycle:5   complete:4   empty:3   kneser:5,2   petersen
    circulant:9,1+2   cayley_abelian:8,1+3   copies:2xcomplete:3
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import BadParameters
from .graph import Graph, build_graph

KINDS = ("cycle", "complete", "empty", "circulant", "kneser", "cayley_abelian", "disjoint_copies")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()
    connection: tuple[int, ...] = ()
    inner: "FamilySpec | None" = None

    def __str__(self) -> str:
        if self.kind == "disjoint_copies":
            return f"copies:{self.params[0]}x{self.inner}"
        if self.kind in ("circulant", "cayley_abelian"):
            return f"{self.kind}:{self.params[0]},{'+'.join(map(str, self.connection))}"
        return f"{self.kind}:{','.join(map(str, self.params))}"


def cycle(n: int) -> FamilySpec:
    return FamilySpec("cycle", (n,))


def complete(n: int) -> FamilySpec:
    return FamilySpec("complete", (n,))


def empty(n: int) -> FamilySpec:
    return FamilySpec("empty", (n,))


def kneser(n: int, k: int) -> FamilySpec:
    return FamilySpec("kneser", (n, k))


def circulant(n: int, connection) -> FamilySpec:
    return FamilySpec("circulant", (n,), normalize_connection(n, connection))


def cayley_abelian(n: int, connection) -> FamilySpec:
    return FamilySpec("cayley_abelian", (n,), normalize_connection(n, connection))


def copies(m: int, inner: FamilySpec) -> FamilySpec:
    return FamilySpec("disjoint_copies", (m,), (), inner)


def normalize_connection(n: int, connection) -> tuple[int, ...]:
    """Map residues to their representative in 1..n//2 (closing under negation)."""
    if n < 1:
        raise BadParameters("circulant order must be positive")
    out = set()
    for s in connection:
        r = s % n
        if r == 0:
            raise BadParameters(f"connection element {s} is 0 mod {n}")
        out.add(min(r, n - r))
    return tuple(sorted(out))


def parse_spec(text: str) -> FamilySpec:
    text = text.strip()
    if text == "petersen":
        return kneser(5, 2)
    kind, sep, rest = text.partition(":")
    if not sep:
        raise BadParameters(f"cannot parse family spec {text!r}")
    try:
        if kind in ("copies", "disjoint_copies"):
            m, sep, inner = rest.partition("x")
            if not sep:
                raise BadParameters(f"copies spec needs 'MxINNER', got {rest!r}")
            return copies(int(m), parse_spec(inner))
        if kind in ("circulant", "cayley_abelian"):
            n, _, conn = rest.partition(",")
            elems = [int(s) for s in conn.split("+") if s]
            fn = circulant if kind == "circulant" else cayley_abelian
            return fn(int(n), elems)
        if kind in ("cycle", "complete", "empty", "kneser"):
            return FamilySpec(kind, tuple(int(p) for p in rest.split(",")))
    except ValueError as exc:
        if isinstance(exc, BadParameters):
            raise
        raise BadParameters(f"bad integer in {text!r}") from exc
    raise BadParameters(f"unknown family {kind!r}")


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParameters(msg)


def _circulant_graph(n: int, conn: tuple[int, ...], label: str) -> Graph:
    edges = [(i, (i + s) % n) for i in range(n) for s in conn]
    return build_graph(n, edges, label)


def colex_subsets(n: int, k: int) -> list[tuple[int, ...]]:
    return sorted(itertools.combinations(range(n), k), key=lambda c: c[::-1])


def generate(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    kind, p = spec.kind, spec.params
    label = str(spec)
    if kind == "cycle":
        _need(len(p) == 1 and p[0] >= 3, "cycle needs n >= 3")
        return _circulant_graph(p[0], (1,), label)
    if kind == "complete":
        _need(len(p) == 1 and p[0] >= 1, "complete needs n >= 1")
        n = p[0]
        return build_graph(n, itertools.combinations(range(n), 2), label)
    if kind == "empty":
        _need(len(p) == 1 and p[0] >= 1, "empty needs n >= 1")
        return build_graph(p[0], [], label)
    if kind in ("circulant", "cayley_abelian"):
        _need(len(p) == 1 and p[0] >= 1, "circulant needs n >= 1")
        n = p[0]
        _need(all(1 <= s <= n // 2 for s in spec.connection), "connection set must lie in 1..n//2")
        return _circulant_graph(n, spec.connection, label)
    if kind == "kneser":
        _need(len(p) == 2, "kneser needs n,k")
        n, k = p
        _need(n >= 2 * k >= 2, "kneser requires n >= 2k >= 2")
        subsets = [frozenset(c) for c in colex_subsets(n, k)]
        edges = [
            (i, j)
            for i in range(len(subsets))
            for j in range(i + 1, len(subsets))
            if not subsets[i] & subsets[j]
        ]
        return build_graph(len(subsets), edges, label)
    if kind == "disjoint_copies":
        _need(len(p) == 1 and p[0] >= 1 and spec.inner is not None, "copies needs m >= 1 and an inner spec")
        inner = generate(spec.inner)
        m, k = p[0], inner.n
        edges = [(c * k + u, c * k + v) for c in range(m) for u, v in inner.edges()]
        return build_graph(m * k, edges, label)
    raise BadParameters(f"unknown family {kind!r}")


def _connected_circulant_sets(n: int) -> list[tuple[int, ...]]:
    """Connection sets of connected circulants on n vertices, one per multiplier class."""
    half = list(range(1, n // 2 + 1))
    units = [a for a in range(1, n) if math.gcd(a, n) == 1]
    seen = set()
    reps = []
    for r in range(1, len(half) + 1):
        for conn in itertools.combinations(half, r):
            if math.gcd(n, *conn) != 1:
                continue
            if conn in seen:
                continue
            orbit = {normalize_connection(n, [a * s for s in conn]) for a in units}
            seen |= orbit
            reps.append(min(orbit))
    return reps


def corpus(max_vertices: int) -> list[tuple[FamilySpec, Graph]]:
    """Deterministic catalogue of vertex-transitive graphs with at most max_vertices vertices.

    Order: cycles, complete graphs, Petersen, K(7,3), circulants up to 12
    vertices (one per multiplier class, skipping ones already listed), 2K_3.
    K_2 appears once, among the complete graphs; C_3 and K_3 both appear.
    """
    if max_vertices < 2:
        raise BadParameters("corpus needs max_vertices >= 2")
    specs: list[FamilySpec] = []
    specs += [cycle(n) for n in range(3, max_vertices + 1)]
    specs += [complete(n) for n in range(2, min(max_vertices, 8) + 1)]
    if max_vertices >= 10:
        specs.append(kneser(5, 2))
    if max_vertices >= 35:
        specs.append(kneser(7, 3))
    for n in range(3, min(max_vertices, 12) + 1):
        for conn in _connected_circulant_sets(n):
            specs.append(circulant(n, conn))
    if max_vertices >= 6:
        specs.append(copies(2, complete(3)))

    # named entries are kept as listed (C_3 and K_3 both appear); generated
    # circulants are dropped when they repeat an earlier adjacency
    out = []
    seen = set()
    for spec in specs:
        g = generate(spec)
        if spec.kind == "circulant" and g.key() in seen:
            continue
        seen.add(g.key())
        out.append((spec, g))
    return out
