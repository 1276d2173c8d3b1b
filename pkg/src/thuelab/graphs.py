"""Finite simple graphs, named families, the lexicographic product and exact
independence / clique numbers."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence

from .errors import BadParameter, EmptyFactor, ThueLabError, UnknownFamily


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    n: int
    adjacency: tuple[frozenset[int], ...]
    labels: Optional[tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise BadParameter("adjacency must have one entry per vertex")
        for v, nbrs in enumerate(self.adjacency):
            if v in nbrs:
                raise BadParameter(f"loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n or v not in self.adjacency[u]:
                    raise BadParameter(f"adjacency is not symmetric at edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise BadParameter(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise BadParameter(f"edge {u}-{v} out of range for n={n}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(a) for a in adj), None if labels is None else tuple(labels))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks."""
        return tuple(sum(1 << u for u in nbrs) for nbrs in self.adjacency)

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def complement(self) -> "Graph":
        full = set(range(self.n))
        return Graph(self.n, tuple(frozenset(full - a - {v}) for v, a in enumerate(self.adjacency)))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabelled ``0..len(vertices)-1`` in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[u], index[v]) for u, v in combinations(vertices, 2) if self.has_edge(u, v)]
        return Graph.from_edges(len(vertices), edges)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(not self.has_edge(u, v) for u, v in combinations(vs, 2))

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self.adjacency[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1


@dataclass(frozen=True)
class ProductVertex:
    g: int
    h: int


@dataclass(frozen=True)
class MultipartiteSpec:
    part_sizes: tuple[int, ...]

    def __post_init__(self):
        if not self.part_sizes or any(int(s) < 1 for s in self.part_sizes):
            raise BadParameter(f"part sizes must be positive and nonempty, got {self.part_sizes}")

    @property
    def n(self) -> int:
        return sum(self.part_sizes)


# --- families ---------------------------------------------------------------

def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    return Graph.from_edges(n, [])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParameter(f"C_n needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Star with ``n`` leaves (``n + 1`` vertices), centre first."""
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def complete_multipartite(spec: MultipartiteSpec | Sequence[int]) -> Graph:
    if not isinstance(spec, MultipartiteSpec):
        spec = MultipartiteSpec(tuple(spec))
    part = []
    for i, size in enumerate(spec.part_sizes):
        part.extend([i] * size)
    n = len(part)
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]])


_SIMPLE = re.compile(r"^([kepcs])(\d+)$")
_MULTI = re.compile(r"^k(\d+(?:,\d+)+)$")


def _top_level_commas(body: str) -> list[int]:
    out, depth = [], 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            out.append(i)
    return out


def _split_lex(body: str, desc: str) -> tuple[Graph, Graph]:
    # multipartite descriptors contain commas too, so accept the unique
    # top-level split where both halves parse
    found = []
    for i in _top_level_commas(body):
        try:
            found.append((make_family(body[:i]), make_family(body[i + 1:])))
        except (ThueLabError, OSError):
            continue
    if len(found) != 1:
        what = "ambiguous" if found else "invalid"
        raise BadParameter(f"{what} lex() arguments in {desc!r}; parenthesise them")
    return found[0]


def make_family(desc: str) -> Graph:
    """Build a graph from a family descriptor.

    Grammar (prefixes case-insensitive)::

        K<n> | E<n> | P<n> | C<n> | S<n> | K<n1>,<n2>[,...]
        lex(<desc>,<desc>) | g6:<graph6> | file:<path>

    ``S<n>`` is the star with ``n`` leaves. ``file:`` accepts a graph6 line or
    an edge list.
    """
    from . import graphio

    text = desc.strip()
    low = text.lower()
    if low.startswith("g6:"):
        return graphio.from_graph6(text[3:])
    if low.startswith("file:"):
        return graphio.read_graph_file(Path(text[5:]))
    if low.startswith("lex(") and low.endswith(")"):
        return lex_product(*_split_lex(text[4:-1], desc))
    if text.startswith("(") and text.endswith(")"):
        return make_family(text[1:-1])
    low = low.replace(" ", "")
    m = _MULTI.match(low)
    if m:
        sizes = tuple(int(s) for s in m.group(1).split(","))
        if any(s < 1 for s in sizes):
            raise BadParameter(f"part sizes must be positive in {desc!r}")
        return complete_multipartite(MultipartiteSpec(sizes))
    m = _SIMPLE.match(low)
    if not m:
        raise UnknownFamily(f"cannot parse graph descriptor {desc!r}")
    kind, k = m.group(1), int(m.group(2))
    if kind == "c":
        return cycle(k)
    if kind == "s":
        if k < 1:
            raise BadParameter("S<n> needs n >= 1")
        return star(k)
    if k < 1:
        raise BadParameter(f"{kind.upper()}<n> needs n >= 1, got {k}")
    return {"k": complete, "e": empty, "p": path}[kind](k)


# --- lexicographic product ----------------------------------------------------

def lex_product(g: Graph, h: Graph) -> Graph:
    """G∘H with (g, h) numbered ``g * |V(H)| + h``."""
    if g.n == 0 or h.n == 0:
        raise EmptyFactor("both factors of a lexicographic product must be nonempty")
    nh = h.n
    adj = []
    for u in range(g.n):
        for v in range(nh):
            nbrs = {x * nh + y for x in g.adjacency[u] for y in range(nh)}
            nbrs.update(u * nh + y for y in h.adjacency[v])
            adj.append(frozenset(nbrs))
    labels = tuple(f"({u},{v})" for u in range(g.n) for v in range(nh))
    return Graph(g.n * nh, tuple(adj), labels)


def product_vertex(index: int, nh: int) -> ProductVertex:
    return ProductVertex(*divmod(index, nh))


def product_index(pv: ProductVertex, nh: int) -> int:
    return pv.g * nh + pv.h


def layer(u: int, nh: int) -> list[int]:
    """Vertices of the H-layer above ``u`` in a product numbered row-major."""
    return list(range(u * nh, (u + 1) * nh))


# --- independence and cliques -----------------------------------------------

def _clique_cover_bound(masks: tuple[int, ...], cand: int) -> int:
    # greedy clique cover of the candidate set; each clique holds at most
    # one vertex of an independent set
    cover = 0
    while cand:
        v = (cand & -cand).bit_length() - 1
        clique = 1 << v
        common = masks[v] & cand
        while common:
            u = (common & -common).bit_length() - 1
            clique |= 1 << u
            common &= masks[u]
        cand &= ~clique
        cover += 1
    return cover


def _max_independent_size(masks: tuple[int, ...], cand: int) -> int:
    best = 0

    def branch(cand: int, size: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + _clique_cover_bound(masks, cand) <= best:
            return
        # branch on a vertex of maximum degree inside the candidate set
        v = max(iter_bits(cand), key=lambda x: (bin(masks[x] & cand).count("1"), -x))
        if not masks[v] & cand:
            best = max(best, size + bin(cand).count("1"))
            return
        branch(cand & ~(1 << v) & ~masks[v], size + 1)
        branch(cand & ~(1 << v), size)

    branch(cand, 0)
    return best


def max_independent_set(g: Graph) -> list[int]:
    """Lexicographically least maximum independent set (sorted)."""
    masks = g.masks
    cand = (1 << g.n) - 1
    alpha = _max_independent_size(masks, cand)
    chosen: list[int] = []
    for v in range(g.n):
        if not cand >> v & 1:
            continue
        rest = cand & ~((1 << (v + 1)) - 1) & ~masks[v]
        if len(chosen) + 1 + _max_independent_size(masks, rest) == alpha:
            chosen.append(v)
            cand = rest
        else:
            cand &= ~(1 << v)
    return chosen


def independence_number(g: Graph) -> tuple[int, list[int]]:
    """Return ``(alpha, witness)`` with the lexicographically least witness."""
    m = max_independent_set(g)
    return len(m), m


def clique_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    return len(max_independent_set(g.complement()))


# --- simple paths -------------------------------------------------------------

def enumerate_simple_paths(g: Graph, visit: Callable[[list[int]], object]) -> None:
    """Call ``visit(path)`` once per undirected simple path.

    Each path is delivered with its smaller endpoint first; single vertices
    count as paths. A truthy return from ``visit`` stops the enumeration.
    The list passed to ``visit`` is reused, so copy it to keep it.
    """
    masks = g.masks

    def extend(p: list[int], used: int) -> bool:
        for u in iter_bits(masks[p[-1]] & ~used):
            p.append(u)
            if u > p[0] and visit(p):
                return True
            if extend(p, used | 1 << u):
                return True
            p.pop()
        return False

    for s in range(g.n):
        p = [s]
        if visit(p) or extend(p, 1 << s):
            return


def small_graphs(n: int) -> list[Graph]:
    """One graph per isomorphism class on ``n`` vertices (brute force, n <= 6)."""
    from itertools import permutations

    from .graphio import to_graph6

    if n > 6:
        raise BadParameter("small_graphs enumerates by brute force; n <= 6")
    pairs = list(combinations(range(n), 2))
    perms = list(permutations(range(n)))
    classes: dict[str, Graph] = {}
    seen: set[int] = set()
    for bits in range(1 << len(pairs)):
        if bits in seen:
            continue
        edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        images = set()
        for p in perms:
            img = 0
            for u, v in edges:
                a, b = sorted((p[u], p[v]))
                img |= 1 << pairs.index((a, b))
            images.add(img)
        seen |= images
        rep = min(images)
        g = Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if rep >> i & 1])
        classes[to_graph6(g)] = g
    return [classes[k] for k in sorted(classes)]
