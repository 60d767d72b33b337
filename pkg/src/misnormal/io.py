"""graph6 (McKay) and plain edge-list readers/writers."""

from __future__ import annotations

from pathlib import Path

from .errors import FormatError
from .graph import Graph, build_graph

HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 0:
        raise FormatError("negative order")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise FormatError("graph too large for graph6")


def _decode_n(data: bytes) -> tuple[int, int]:
    """Return (n, offset of the adjacency body)."""
    if not data:
        raise FormatError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        chunk, off = data[2:8], 8
        width = 6
    else:
        chunk, off = data[1:4], 4
        width = 3
    if len(chunk) != width:
        raise FormatError("truncated graph6 size field")
    n = 0
    for c in chunk:
        n = (n << 6) | (c - 63)
    return n, off


def to_graph6(G: Graph, header: bool = False) -> str:
    bits = []
    for j in range(1, G.n):
        row = G.rows[j]
        for i in range(j):
            bits.append((row >> i) & 1)
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k : k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return (HEADER if header else "") + _encode_n(G.n) + body


def from_graph6(text: str, label: str | None = None) -> Graph:
    text = text.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER) :]
    data = text.encode("ascii")
    if any(c < 63 or c > 126 for c in data):
        raise FormatError("graph6 byte outside 63..126")
    n, off = _decode_n(data)
    body = data[off:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise FormatError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges, label)


def to_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {G.num_edges}"]
    lines += [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str, label: str | None = None) -> Graph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise FormatError("empty edge list")
    try:
        n, m = (int(x) for x in lines[0].split())
        edges = [tuple(int(x) for x in ln.split()) for ln in lines[1:]]
    except ValueError as exc:
        raise FormatError(f"malformed edge list: {exc}") from exc
    if any(len(e) != 2 for e in edges):
        raise FormatError("each edge line needs exactly two vertices")
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}")
    return build_graph(n, edges, label)


def read_graph(path: str | Path) -> Graph:
    """Read the first graph of a .g6 file, or an edge-list file for any other suffix."""
    path = Path(path)
    text = path.read_text(encoding="ascii")
    if path.suffix == ".g6":
        first = next((ln for ln in text.splitlines() if ln.strip()), "")
        return from_graph6(first, label=path.name)
    return from_edge_list(text, label=path.name)


def write_graph(G: Graph, path: str | Path) -> None:
    path = Path(path)
    if path.suffix == ".g6":
        path.write_text(to_graph6(G) + "\n", encoding="ascii")
    else:
        path.write_text(to_edge_list(G), encoding="ascii")
