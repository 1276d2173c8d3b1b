"""Squares in words, a ternary squarefree generator, and the interleaving
constructions that keep a word squarefree.

Words are plain sequences of non-negative integers. Positions are 0-based
here; a cut point ``c`` splits a word into ``a[:c]`` and ``a[c:]``.
"""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

from .errors import AlphabetOverlap, BadCuts, NotNonrepetitive, NotRainbow

Word = Sequence[int]

# below this length the pure-Python scan beats numpy's per-call overhead
_NUMPY_THRESHOLD = 96


def _find_repetition_small(w: Word) -> Optional[tuple[int, int]]:
    w = list(w)
    size = len(w)
    for start in range(size):
        for half in range(1, (size - start) // 2 + 1):
            if w[start:start + half] == w[start + half:start + 2 * half]:
                return start, half
    return None


def _find_repetition_numpy(w: Word) -> Optional[tuple[int, int]]:
    a = np.asarray(w, dtype=np.int64)
    size = a.size
    best: Optional[tuple[int, int]] = None
    for half in range(1, size // 2 + 1):
        # a square of half-length `half` at i is a run of `half` matches
        # between a[j] and a[j + half] for j in [i, i + half)
        eq = (a[:-half] == a[half:]).astype(np.int32)
        csum = np.concatenate(([0], np.cumsum(eq)))
        windows = csum[half:] - csum[:-half]
        hits = np.flatnonzero(windows[: size - 2 * half + 1] == half)
        if hits.size:
            start = int(hits[0])
            if best is None or start < best[0]:
                best = (start, half)
                if start == 0:
                    break
    return best


def find_repetition(w: Word) -> Optional[tuple[int, int]]:
    """Return ``(start, half_length)`` of the first square block in ``w``.

    Blocks are ordered by start position, then by half length. Returns
    ``None`` when ``w`` is squarefree.
    """
    if len(w) < _NUMPY_THRESHOLD:
        return _find_repetition_small(w)
    return _find_repetition_numpy(w)


def is_nonrepetitive(w: Word) -> bool:
    return find_repetition(w) is None


def thue_word(length: int) -> list[int]:
    """Prefix of the fixed point of 0->012, 1->02, 2->1 (squarefree, ternary)."""
    if length < 0:
        raise ValueError("length must be non-negative")
    word = [0]
    images = ((0, 1, 2), (0, 2), (1,))
    while len(word) < length:
        word = [s for x in word for s in images[x]]
    return word[:length]


def _check_cuts(m: int, cuts: Sequence[int]) -> None:
    if m == 0:
        raise BadCuts("the interrupted word must be nonempty")
    prev = 0
    for c in cuts:
        if not isinstance(c, (int, np.integer)) or c <= prev or c >= m:
            raise BadCuts(f"cut points must be strictly increasing in 1..{m - 1}, got {list(cuts)}")
        prev = c


def _segments(a: Word, cuts: Sequence[int]) -> list[list[int]]:
    bounds = [0, *cuts, len(a)]
    return [list(a[lo:hi]) for lo, hi in zip(bounds, bounds[1:])]


def _splice(a: Word, cuts: Sequence[int], blocks: Sequence[Word]) -> list[int]:
    out: list[int] = list(blocks[0])
    for seg, block in zip(_segments(a, cuts), blocks[1:]):
        out.extend(seg)
        out.extend(block)
    return out


def interleave(a: Word, cuts: Sequence[int], blocks: Sequence[Word]) -> list[int]:
    """Insert ``blocks[i]`` between consecutive segments of ``a``.

    The result is ``blocks[0] + a[:c1] + blocks[1] + a[c1:c2] + ... + blocks[-1]``.
    When ``a`` and every block are squarefree and no block shares a symbol
    with ``a``, the result is squarefree. The outer blocks may be empty;
    interior blocks must not be.
    """
    _check_cuts(len(a), cuts)
    if len(blocks) != len(cuts) + 2:
        raise BadCuts(f"expected {len(cuts) + 2} blocks for {len(cuts)} cuts, got {len(blocks)}")
    if any(len(b) == 0 for b in blocks[1:-1]):
        raise BadCuts("interior blocks must be nonempty")
    shared = set(a) & set().union(*map(set, blocks))
    if shared:
        raise AlphabetOverlap(f"symbols {sorted(shared)} occur in both the word and the blocks")
    if not is_nonrepetitive(a):
        raise NotNonrepetitive("the interrupted word contains a square")
    for i, b in enumerate(blocks):
        if not is_nonrepetitive(b):
            raise NotNonrepetitive(f"block {i} contains a square")
    out = _splice(a, cuts, blocks)
    if __debug__:
        assert find_repetition(out) is None, out
    return out


def rainbow_interrupt(a: Word, cuts: Sequence[int], singles: Sequence[int]) -> list[int]:
    """Interrupt a word with pairwise distinct symbols by single foreign symbols.

    ``singles`` may repeat symbols among themselves; it must hold
    ``len(cuts) + 2`` entries, none of which occurs in ``a``.
    """
    if len(set(a)) != len(a):
        raise NotRainbow("the interrupted word repeats a symbol")
    _check_cuts(len(a), cuts)
    if len(singles) != len(cuts) + 2:
        raise BadCuts(f"expected {len(cuts) + 2} symbols for {len(cuts)} cuts, got {len(singles)}")
    shared = set(a) & set(singles)
    if shared:
        raise AlphabetOverlap(f"symbols {sorted(shared)} occur in the word")
    out = _splice(a, cuts, [[s] for s in singles])
    if __debug__:
        assert find_repetition(out) is None, out
    return out
