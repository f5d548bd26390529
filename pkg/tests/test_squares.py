from itertools import combinations_with_replacement
from math import isqrt

import pytest

from latcube.errors import NotRepresentable
from latcube.squares import (
    decompose_four_squares,
    decompose_n_squares,
    decompose_three_squares,
    decompose_two_squares,
    is_in_I1,
    is_in_I2,
    is_in_I3,
)

LIMIT = 5000


def brute_sorted(m, k):
    """Lexicographically least sorted k-tuple of squares summing to m, or None."""
    r = isqrt(m)
    for t in combinations_with_replacement(range(r + 1), k):
        if sum(x * x for x in t) == m:
            return t
    return None


def representable_table(k, limit):
    hit = [False] * (limit + 1)
    r = isqrt(limit)
    for t in combinations_with_replacement(range(r + 1), k):
        s = sum(x * x for x in t)
        if s <= limit:
            hit[s] = True
    return hit


@pytest.mark.parametrize("k, decider", [(1, is_in_I1), (2, is_in_I2), (3, is_in_I3)])
def test_deciders_match_exhaustive_search(k, decider):
    table = representable_table(k, LIMIT)
    for m in range(LIMIT + 1):
        assert decider(m) == table[m], m


@pytest.mark.parametrize("m, expected", [(13, True), (21, False), (0, True)])
def test_is_in_I2_examples(m, expected):
    assert is_in_I2(m) is expected


@pytest.mark.parametrize("m, expected", [(7, False), (3, True), (28, False)])
def test_is_in_I3_examples(m, expected):
    assert is_in_I3(m) is expected


@pytest.mark.parametrize(
    "fn, m, expected",
    [
        (decompose_two_squares, 13, (2, 3)),
        (decompose_two_squares, 25, (0, 5)),
        (decompose_three_squares, 3, (1, 1, 1)),
        (decompose_three_squares, 6, (1, 1, 2)),
        (decompose_four_squares, 7, (1, 1, 1, 2)),
        (decompose_four_squares, 0, (0, 0, 0, 0)),
        (decompose_four_squares, 15, (1, 1, 2, 3)),
    ],
)
def test_decomposition_examples(fn, m, expected):
    assert fn(m).terms == expected


@pytest.mark.parametrize("fn, m", [(decompose_two_squares, 21), (decompose_three_squares, 7)])
def test_not_representable(fn, m):
    with pytest.raises(NotRepresentable):
        fn(m)


@pytest.mark.parametrize(
    "m, n, expected", [(25, 1, (5,)), (7, 5, (0, 1, 1, 1, 2))]
)
def test_decompose_n_examples(m, n, expected):
    assert decompose_n_squares(m, n).terms == expected


@pytest.mark.parametrize("m, n", [(7, 3), (8, 1), (21, 2)])
def test_decompose_n_refuses(m, n):
    with pytest.raises(NotRepresentable):
        decompose_n_squares(m, n)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_canonical_matches_brute_force(k):
    for m in range(400):
        expected = brute_sorted(m, k)
        if expected is None:
            with pytest.raises(NotRepresentable):
                decompose_n_squares(m, k)
        else:
            assert decompose_n_squares(m, k).terms == expected


def test_four_squares_total_up_to_1e5():
    for m in range(10**5 + 1):
        assert sum(t * t for t in decompose_four_squares(m).terms) == m


def test_deterministic():
    for m in (99991, 123456, 2**40 + 15):
        assert decompose_four_squares(m) == decompose_four_squares(m)


def test_large_inputs():
    m = 2**40 + 1
    assert sum(t * t for t in decompose_two_squares(m).terms) == m
    m = 10**12 + 41
    assert sum(t * t for t in decompose_three_squares(m).terms) == m
