import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_square
from thuelab.errors import AlphabetOverlap, BadCuts, NotNonrepetitive, NotRainbow
from thuelab.words import (
    _find_repetition_numpy,
    _find_repetition_small,
    find_repetition,
    interleave,
    is_nonrepetitive,
    rainbow_interrupt,
    thue_word,
)


@pytest.mark.parametrize("w, expected", [
    ([1, 2, 1, 2], (0, 2)),
    ([1, 2, 1], None),
    ([0, 1, 0, 2, 0, 1, 0], None),
    ([], None),
    ([3, 1, 1], (1, 1)),
    ([5, 1, 2, 1, 2, 1], (1, 2)),
])
def test_find_repetition_examples(w, expected):
    assert find_repetition(w) == expected


@pytest.mark.parametrize("w, expected", [([1, 1], False), ([], True), ([0, 1, 0, 2, 0, 1, 0], True)])
def test_is_nonrepetitive_examples(w, expected):
    assert is_nonrepetitive(w) is expected


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(0, 2), max_size=24))
def test_find_repetition_matches_brute_scan(w):
    squares = brute_square(w)
    assert find_repetition(w) == (squares[0] if squares else None)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=60))
def test_numpy_scan_agrees_with_small_scan(w):
    assert _find_repetition_numpy(w) == _find_repetition_small(w)


def test_numpy_scan_finds_planted_square():
    w = thue_word(400)
    planted = w[:250] + w[150:250] + w[250:]
    assert find_repetition(planted) == _find_repetition_small(planted)
    assert find_repetition(planted) is not None


def test_thue_word_small():
    assert thue_word(0) == []
    assert thue_word(1) == [0]
    w = thue_word(12)
    assert len(w) == 12 and not brute_square(w)


@pytest.mark.parametrize("length", [0, 1, 2, 7, 100, 1000, 4321, 10_000])
def test_thue_word_squarefree_ternary(length):
    w = thue_word(length)
    assert len(w) == length
    assert set(w) <= {0, 1, 2}
    assert is_nonrepetitive(w)


def test_thue_word_deterministic_prefixes():
    assert thue_word(500)[:123] == thue_word(123)


def test_thue_word_rejects_negative():
    with pytest.raises(ValueError):
        thue_word(-1)


def test_prefix_and_suffix_closure():
    w = thue_word(200)
    for i in range(0, 201, 7):
        assert is_nonrepetitive(w[:i])
        assert is_nonrepetitive(w[i:])


@pytest.mark.parametrize("a, cuts, blocks, expected", [
    ([1], [], [[7], [8]], [7, 1, 8]),
    ([1, 2, 3], [1, 2], [[9], [9], [9], [9]], [9, 1, 9, 2, 9, 3, 9]),
    ([1, 2, 1], [2], [[7, 8], [8, 7], [7]], [7, 8, 1, 2, 8, 7, 1, 7]),
    ([1, 2], [1], [[], [7], []], [1, 7, 2]),
])
def test_interleave_examples(a, cuts, blocks, expected):
    out = interleave(a, cuts, blocks)
    assert out == expected
    assert not brute_square(out)


def test_interleave_errors():
    with pytest.raises(AlphabetOverlap):
        interleave([1, 2], [1], [[2], [7], []])
    with pytest.raises(NotNonrepetitive):
        interleave([1, 1], [], [[7], [8]])
    with pytest.raises(NotNonrepetitive):
        interleave([1], [], [[7, 7], [8]])
    with pytest.raises(BadCuts):
        interleave([1, 2, 3], [2, 1], [[7], [8], [7], [8]])
    with pytest.raises(BadCuts):
        interleave([1, 2, 3], [1, 1], [[7], [8], [7], [8]])
    with pytest.raises(BadCuts):
        interleave([1, 2, 3], [3], [[7], [8], [7]])
    with pytest.raises(BadCuts):
        interleave([1, 2], [1], [[7], [8]])
    with pytest.raises(BadCuts):
        interleave([1, 2], [1], [[7], [], [8]])
    with pytest.raises(BadCuts):
        interleave([], [], [[7], [7]])


def test_equal_cut_points_would_break_squarefreeness():
    # why cuts must be strictly increasing: an empty segment juxtaposes blocks
    assert not is_nonrepetitive([1, 9, 9, 2])


@pytest.mark.parametrize("a, cuts, singles, expected", [
    ([1, 2], [], [5, 6], [5, 1, 2, 6]),
    ([1, 2, 3], [1], [9, 9, 9], [9, 1, 9, 2, 3, 9]),
    ([4], [], [5, 5], [5, 4, 5]),
])
def test_rainbow_interrupt_examples(a, cuts, singles, expected):
    out = rainbow_interrupt(a, cuts, singles)
    assert out == expected
    assert not brute_square(out)


def test_rainbow_interrupt_errors():
    with pytest.raises(NotRainbow):
        rainbow_interrupt([1, 2, 1], [1], [7, 7, 7])
    with pytest.raises(AlphabetOverlap):
        rainbow_interrupt([1, 2], [], [2, 7])
    with pytest.raises(BadCuts):
        rainbow_interrupt([1, 2], [], [7])
    with pytest.raises(BadCuts):
        rainbow_interrupt([1, 2], [0], [7, 7, 7])


def random_interleave_case(rng: random.Random):
    m = rng.randint(1, 40)
    a = [x + 10 for x in thue_word(m + rng.randint(0, 30))[-m:]]
    r = rng.randint(0, m - 1)
    cuts = sorted(rng.sample(range(1, m), r))
    blocks = []
    for i in range(r + 2):
        lo = 0 if i in (0, r + 1) else 1
        size = rng.randint(lo, 12)
        offset = rng.randint(0, 20)
        blocks.append([100 + rng.choice((0, 3)) + x for x in thue_word(size + offset)[offset:]])
    return a, cuts, blocks


def random_rainbow_case(rng: random.Random):
    m = rng.randint(1, 30)
    a = rng.sample(range(1000), m)
    r = rng.randint(0, m - 1)
    cuts = sorted(rng.sample(range(1, m), r))
    singles = [rng.choice([2000, 2001, 2002]) for _ in range(r + 2)]
    return a, cuts, singles


def test_interleave_random_inputs_stay_squarefree():
    rng = random.Random(7)
    for _ in range(1000):
        a, cuts, blocks = random_interleave_case(rng)
        assert is_nonrepetitive(interleave(a, cuts, blocks))


def test_rainbow_interrupt_random_inputs_stay_squarefree():
    rng = random.Random(11)
    for _ in range(1000):
        a, cuts, singles = random_rainbow_case(rng)
        assert is_nonrepetitive(rainbow_interrupt(a, cuts, singles))
