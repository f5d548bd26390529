import pytest

from latcube.classify import (
    Criterion,
    DimensionPair,
    SetDescriptor,
    descriptor_for,
    is_member,
)
from latcube.errors import InvalidDimensions
from latcube.squares import decompose_n_squares
from latcube.errors import NotRepresentable

I1, I2, I3, N0 = SetDescriptor.I1, SetDescriptor.I2, SetDescriptor.I3, SetDescriptor.N0

# rows n - d = 0, 1, 2, >=3; columns d mod 4 = 1, 2, 3, 0
TABLE = [
    [I1, I2, I1, N0],
    [I2, I2, N0, N0],
    [I3, N0, N0, N0],
    [N0, N0, N0, N0],
]


def test_full_table():
    for d in range(1, 30):
        for n in range(d, 40):
            row = min(n - d, 3)
            col = (d - 1) % 4
            assert descriptor_for((d, n)) is TABLE[row][col]


@pytest.mark.parametrize(
    "d, n, expected",
    [(1, 1, I1), (2, 2, I2), (3, 3, I1), (4, 4, N0), (5, 6, I2)],
)
def test_descriptor_examples(d, n, expected):
    assert descriptor_for(DimensionPair(d, n)) is expected


@pytest.mark.parametrize("d, n", [(0, 3), (5, 4), (-1, 2)])
def test_invalid_dimensions(d, n):
    with pytest.raises(InvalidDimensions):
        descriptor_for((d, n))


def test_shift_invariance():
    for n in range(1, 21):
        for d in range(1, n + 1):
            assert descriptor_for((d, n)) is descriptor_for((d + 4, n + 4))


def test_member_examples():
    v = is_member(3, (2, 3))
    assert not v.member
    assert v.criterion is Criterion.FERMAT
    assert v.reason == "I2 violation: prime 3 odd exponent"
    assert is_member(13, (2, 2)).member
    v = is_member(7, (1, 3))
    assert not v.member and v.criterion is Criterion.LEGENDRE
    assert is_member(5, (4, 7)).member
    v = is_member(7, (3, 3))
    assert not v.member and v.criterion is Criterion.NON_SQUARE


def test_zero_is_always_member():
    for n in range(1, 10):
        for d in range(1, n + 1):
            assert is_member(0, (d, n)).member


def test_monotone_in_ambient_dimension():
    for d in range(1, 8):
        for n in range(d, 12):
            for m in range(200):
                if is_member(m, (d, n)).member:
                    assert is_member(m, (d, n + 1)).member


def test_dimension_one_matches_decomposition():
    for n in range(1, 5):
        for m in range(2001):
            try:
                decompose_n_squares(m, n)
                ok = True
            except NotRepresentable:
                ok = False
            assert is_member(m, (1, n)).member == ok
