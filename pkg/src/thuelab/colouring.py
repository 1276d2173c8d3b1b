"""Nonrepetitive vertex colourings: verification, exact Thue chromatic number,
the two constructive colourings, and a small list-colouring checker.

Square search
-------------
A path ``p_0 .. p_{2n-1}`` is repetitive when ``c(p_j) == c(p_{n+j})`` for all
``j < n``. Rather than enumerating every path and testing its colour word, the
search grows the two halves side by side: a chain of pairs
``(a_j, b_j) = (p_j, p_{n+j})`` with equal colours, where consecutive ``a``'s
and consecutive ``b``'s are adjacent. The chain closes into a square as soon as
the last ``a`` is adjacent to the first ``b``. Anchoring the first pair on a
vertex ``v`` finds every square through ``v``; the chain is grown to the right
first and then to the left, so each chain is visited once.

During exact search the vertices are coloured one at a time. A square in the
coloured part that was absent before colouring ``v`` must pass through ``v``,
but ``v`` can sit anywhere on it (x-v-y-z coloured 1,2,1,2 with ``v`` last has
no square starting at ``v``), so the check looks for squares *through* ``v``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Sequence

from .errors import (
    DistinctSelectionFailed,
    IncompleteColouring,
    ListTooShort,
    NotIndependent,
    RepetitiveFactorColouring,
    TooLarge,
)
from .graphs import Graph, MultipartiteSpec, clique_number, independence_number, iter_bits


@dataclass(frozen=True)
class Colouring:
    colours: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colours", tuple(int(c) for c in self.colours))

    @property
    def n(self) -> int:
        return len(self.colours)

    @property
    def palette_size(self) -> int:
        return len(set(self.colours))

    def __getitem__(self, v: int) -> int:
        return self.colours[v]

    def to_json(self, g: Graph) -> str:
        from .graphio import to_graph6

        return json.dumps({"graph": to_graph6(g), "colours": list(self.colours)})

    @classmethod
    def from_json(cls, text: str) -> tuple[Optional[str], "Colouring"]:
        """Parse ``{"graph": g6, "colours": [...]}`` or a bare JSON array."""
        data = json.loads(text)
        if isinstance(data, list):
            return None, cls(tuple(data))
        return data.get("graph"), cls(tuple(data["colours"]))


@dataclass(frozen=True)
class ListAssignment:
    lists: tuple[frozenset[int], ...]

    def __post_init__(self):
        lists = tuple(frozenset(l) for l in self.lists)
        if any(not l for l in lists):
            raise ValueError("every list must be nonempty")
        object.__setattr__(self, "lists", lists)

    def __getitem__(self, v: int) -> frozenset[int]:
        return self.lists[v]

    def __len__(self) -> int:
        return len(self.lists)


@dataclass(frozen=True)
class RepetitionWitness:
    path: tuple[int, ...]
    half_length: int


# --- square search --------------------------------------------------------------

def _square_through(v: int, colour, masks, class_mask: dict, allowed: int) -> Optional[list[int]]:
    """A repetitive path through ``v`` inside ``allowed``, or ``None``."""

    def grow(a: list[int], b: list[int], used: int, right: bool) -> Optional[list[int]]:
        if masks[a[-1]] >> b[0] & 1:
            return a + b
        free = allowed & ~used
        if right:
            for x in iter_bits(masks[a[-1]] & free):
                for y in iter_bits(masks[b[-1]] & free & class_mask[colour[x]] & ~(1 << x)):
                    a.append(x)
                    b.append(y)
                    found = grow(a, b, used | 1 << x | 1 << y, True)
                    if found:
                        return found
                    a.pop()
                    b.pop()
        for x in iter_bits(masks[a[0]] & free):
            for y in iter_bits(masks[b[0]] & free & class_mask[colour[x]] & ~(1 << x)):
                a.insert(0, x)
                b.insert(0, y)
                found = grow(a, b, used | 1 << x | 1 << y, False)
                if found:
                    return found
                del a[0], b[0]
        return None

    same = class_mask[colour[v]] & allowed & ~(1 << v)
    for u in iter_bits(same):
        for first, second in ((v, u), (u, v)):
            found = grow([first], [second], 1 << first | 1 << second, True)
            if found:
                return found
    return None


def _class_masks(colours: Sequence[int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for v, c in enumerate(colours):
        out[c] = out.get(c, 0) | 1 << v
    return out


def _as_colours(g: Graph, c) -> tuple[int, ...]:
    colours = tuple(c.colours) if isinstance(c, Colouring) else tuple(c)
    if len(colours) != g.n:
        raise IncompleteColouring(f"colouring has {len(colours)} entries for {g.n} vertices")
    if any(not isinstance(x, int) or x < 0 for x in colours):
        raise IncompleteColouring("colours must be non-negative integers")
    return colours


def verify_nonrepetitive(g: Graph, c) -> Optional[RepetitionWitness]:
    """Return a repetitive simple path, or ``None`` if ``c`` is nonrepetitive."""
    colours = _as_colours(g, c)
    class_mask = _class_masks(colours)
    allowed = (1 << g.n) - 1
    for v in range(g.n):
        found = _square_through(v, colours, g.masks, class_mask, allowed)
        if found:
            return RepetitionWitness(tuple(found), len(found) // 2)
        # every square through v has now been ruled out
        allowed &= ~(1 << v)
    return None


def is_nonrepetitive_colouring(g: Graph, c) -> bool:
    return verify_nonrepetitive(g, c) is None


# --- backtracking ---------------------------------------------------------------

def search_order(g: Graph) -> list[int]:
    """Descending degree, ties by index."""
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def _backtrack(g: Graph, order: Sequence[int], options) -> Optional[list[int]]:
    """Colour ``order`` left to right; ``options(v, n_used)`` yields colours.

    ``n_used`` is one more than the largest colour placed so far, which is
    what the symmetry-breaking rule of the exact search needs.
    """
    masks = g.masks
    colour = [-1] * g.n
    class_mask: dict[int, int] = {}
    prefix = [0]
    for v in order:
        prefix.append(prefix[-1] | 1 << v)

    def rec(idx: int, n_used: int) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        allowed = prefix[idx + 1]
        for c in options(v, n_used):
            cm = class_mask.get(c, 0)
            if masks[v] & cm:
                continue
            colour[v] = c
            class_mask[c] = cm | 1 << v
            if _square_through(v, colour, masks, class_mask, allowed) is None:
                if rec(idx + 1, max(n_used, c + 1)):
                    return True
            class_mask[c] = cm
            colour[v] = -1
        return False

    return colour if rec(0, 0) else None


def colour_with(g: Graph, k: int) -> Optional[Colouring]:
    """A nonrepetitive colouring with colours ``0..k-1``, or ``None``."""
    if g.n == 0:
        return Colouring(())

    def options(v: int, n_used: int):
        # colour j only once 0..j-1 are in use
        return range(min(n_used + 1, k))

    found = _backtrack(g, search_order(g), options)
    return None if found is None else Colouring(tuple(found))


def exact_pi(g: Graph, lower_hint: Optional[int] = None, upper_hint: Optional[int] = None) -> tuple[int, Colouring]:
    """Thue chromatic number of ``g`` with a verified witness colouring.

    Starts at ``max(lower_hint, ω(G))``; every nonrepetitive colouring is
    proper, so the clique number is a valid floor. ``upper_hint`` is only a
    sanity cap: exceeding it raises ``ValueError``.
    """
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    k = max(lower_hint or 1, clique_number(g))
    while k <= g.n:
        if upper_hint is not None and k > upper_hint:
            raise ValueError(f"no nonrepetitive colouring with at most {upper_hint} colours")
        witness = colour_with(g, k)
        if witness is not None:
            assert verify_nonrepetitive(g, witness) is None
            return k, witness
        k += 1
    raise AssertionError("a rainbow colouring is always nonrepetitive")


def multipartite_exact_pi(spec: MultipartiteSpec | Sequence[int]) -> int:
    sizes = spec.part_sizes if isinstance(spec, MultipartiteSpec) else MultipartiteSpec(tuple(spec)).part_sizes
    return sum(sizes) - max(sizes) + 1


# --- constructions ---------------------------------------------------------------

def construct_product_colouring(g: Graph, h: Graph, independent_set: Iterable[int], h_colouring) -> Colouring:
    """Colouring of G∘H: the H-colouring repeated on every layer above the
    independent set, fresh distinct colours everywhere else."""
    chosen = set(independent_set)
    if not all(0 <= u < g.n for u in chosen) or not g.is_independent(chosen):
        raise NotIndependent(f"{sorted(chosen)} is not an independent set of G")
    try:
        base = _as_colours(h, h_colouring)
    except IncompleteColouring as exc:
        raise RepetitiveFactorColouring(str(exc)) from None
    if verify_nonrepetitive(h, base) is not None:
        raise RepetitiveFactorColouring("the colouring of H is repetitive")
    fresh = max(base, default=-1) + 1
    out = []
    for u in range(g.n):
        if u in chosen:
            out.extend(base)
        else:
            out.extend(range(fresh, fresh + h.n))
            fresh += h.n
    return Colouring(tuple(out))


def greedy_list_colouring(g: Graph, lists) -> Colouring:
    """Nonrepetitive colouring from lists of size at least ``n - α(G) + 1``.

    Vertices off a maximum independent set M take pairwise distinct colours;
    each vertex of M then takes a colour unused off M. Along any path the
    off-M colours form a rainbow word interrupted by foreign single symbols,
    which cannot contain a square.
    """
    if not isinstance(lists, ListAssignment):
        lists = ListAssignment(tuple(lists))
    if len(lists) != g.n:
        raise IncompleteColouring(f"{len(lists)} lists for {g.n} vertices")
    alpha, m = independence_number(g)
    need = g.n - alpha + 1
    short = [v for v in range(g.n) if len(lists[v]) < need]
    if short:
        raise ListTooShort(f"vertices {short} have lists shorter than {need}")
    in_m = set(m)
    colour = [-1] * g.n
    taken: set[int] = set()
    for v in range(g.n):
        if v in in_m:
            continue
        free = sorted(lists[v] - taken)
        if not free:
            raise DistinctSelectionFailed(f"no distinct colour left for vertex {v}")
        colour[v] = free[0]
        taken.add(free[0])
    for v in m:
        free = sorted(lists[v] - taken)
        if not free:
            raise DistinctSelectionFailed(f"no colour left for vertex {v} of the independent set")
        colour[v] = free[0]
    return Colouring(tuple(colour))


def list_colour(g: Graph, lists) -> Optional[Colouring]:
    """Exact search for a nonrepetitive colouring from the given lists."""
    if not isinstance(lists, ListAssignment):
        lists = ListAssignment(tuple(lists))
    sorted_lists = [sorted(l) for l in lists.lists]
    found = _backtrack(g, search_order(g), lambda v, n_used: sorted_lists[v])
    return None if found is None else Colouring(tuple(found))


# --- choosability ---------------------------------------------------------------

MAX_CHOOSABLE_VERTICES = 5
MAX_CHOOSABLE_ASSIGNMENTS = 500_000


@dataclass(frozen=True)
class ChoosabilityResult:
    choosable: bool
    counterexample: Optional[ListAssignment] = None
    assignments_checked: int = 0

    def __bool__(self) -> bool:
        return self.choosable


def _count_assignments(n: int, k: int, universe: int) -> int:
    # vertex i picks s colours already named and k - s fresh ones
    counts = {0: 1}
    for _ in range(n):
        nxt: dict[int, int] = {}
        for used, ways in counts.items():
            for s in range(0, min(k, used) + 1):
                t = k - s
                if used + t <= universe:
                    nxt[used + t] = nxt.get(used + t, 0) + ways * comb(used, s)
        counts = nxt
    return sum(counts.values())


def _assignments(n: int, k: int, universe: int):
    lists: list[frozenset[int]] = []

    def rec(used: int):
        if len(lists) == n:
            yield tuple(lists)
            return
        for s in range(0, min(k, used) + 1):
            t = k - s
            if used + t > universe:
                continue
            fresh = frozenset(range(used, used + t))
            for old in combinations(range(used), s):
                lists.append(frozenset(old) | fresh)
                yield from rec(used + t)
                lists.pop()

    yield from rec(0)


def check_choosable(g: Graph, k: int, universe: Optional[int] = None) -> ChoosabilityResult:
    """Is ``g`` nonrepetitively ``k``-choosable over colours ``0..universe-1``?

    Fresh colours are named in order of first use, which removes most
    assignments that differ only by renaming colours. The default universe
    ``k * n`` loses nothing: any assignment of ``k``-lists to ``n`` vertices
    mentions at most ``k * n`` colours, so it is a renaming of one drawn from
    that universe.
    """
    if g.n > MAX_CHOOSABLE_VERTICES:
        raise TooLarge(f"choosability check limited to {MAX_CHOOSABLE_VERTICES} vertices")
    if k < 1:
        raise ValueError("k must be positive")
    if universe is None:
        universe = k * g.n
    if universe < k:
        raise ValueError("universe must hold at least k colours")
    total = _count_assignments(g.n, k, universe)
    if total > MAX_CHOOSABLE_ASSIGNMENTS:
        raise TooLarge(f"{total} list assignments exceed the limit {MAX_CHOOSABLE_ASSIGNMENTS}")
    checked = 0
    for lists in _assignments(g.n, k, universe):
        checked += 1
        if list_colour(g, lists) is None:
            return ChoosabilityResult(False, ListAssignment(lists), checked)
    return ChoosabilityResult(True, None, checked)
