"""graph6 and plain edge-list serialisation."""

from __future__ import annotations

from pathlib import Path

from .errors import GraphFormatError
from .graphs import Graph

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 0 or n >= 1 << 36:
        raise GraphFormatError(f"graph6 cannot encode n={n}")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph, header: bool = False) -> str:
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return (_HEADER if header else "") + _encode_n(g.n) + body


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise GraphFormatError(f"invalid graph6 character in {text!r}")
    if data[0] != 63:
        n, rest = data[0], data[1:]
    elif len(data) > 1 and data[1] == 63:
        if len(data) < 8:
            raise GraphFormatError("truncated graph6 size field")
        n, rest = _decode_int(data[2:8]), data[8:]
    else:
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 size field")
        n, rest = _decode_int(data[1:4]), data[4:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(rest) != need:
        raise GraphFormatError(f"graph6 body has {len(rest)} bytes, expected {need} for n={n}")
    bits = [(d >> (5 - k)) & 1 for d in rest for k in range(6)]
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    if any(bits[pos:]):
        raise GraphFormatError("nonzero padding bits in graph6 string")
    return Graph.from_edges(n, edges)


def _decode_int(chunk: list[int]) -> int:
    value = 0
    for d in chunk:
        value = (value << 6) | d
    return value


def to_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise GraphFormatError("empty edge list")
    try:
        header = [int(x) for x in rows[0]]
        edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except (ValueError, IndexError) as exc:
        raise GraphFormatError(f"malformed edge list: {exc}") from None
    if len(header) != 2:
        raise GraphFormatError("edge list header must be 'n m'")
    n, m = header
    if any(len(r) != 2 for r in rows[1:]):
        raise GraphFormatError("each edge line must hold exactly two vertices")
    if len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(edges)}")
    if len(set(tuple(sorted(e)) for e in edges)) != m:
        raise GraphFormatError("duplicate edge in edge list")
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def read_graph_file(path: Path) -> Graph:
    """Read a graph6 line or an edge list, deciding by the first line."""
    text = Path(path).read_text()
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    if first.startswith(_HEADER) or len(first.split()) == 1:
        return from_graph6(first)
    return from_edge_list(text)
