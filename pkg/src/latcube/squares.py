"""Sums of squares: membership tests for I_1, I_2, I_3 and canonical decompositions.

A decomposition is canonical when its terms are sorted non-decreasingly and
the tuple is lexicographically minimal among all sorted representations.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Optional, Tuple

from .errors import NotRepresentable
from .exact import factorize, is_square


@dataclass(frozen=True)
class SquareDecomposition:
    terms: Tuple[int, ...]
    target: int

    def __post_init__(self):
        if sum(t * t for t in self.terms) != self.target:
            raise AssertionError(f"bad decomposition {self.terms} of {self.target}")
        if any(t < 0 for t in self.terms) or list(self.terms) != sorted(self.terms):
            raise AssertionError(f"decomposition {self.terms} is not sorted/non-negative")

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)


def fermat_obstruction(m: int) -> Optional[int]:
    """Smallest prime p = 3 (mod 4) dividing ``m`` to an odd power, or None."""
    if m == 0:
        return None
    for p, e in factorize(m):
        if p % 4 == 3 and e % 2 == 1:
            return p
    return None


def legendre_obstruction(m: int) -> Optional[Tuple[int, int]]:
    """Return ``(k, l)`` with ``m = 4**k * l`` and ``l = 7 (mod 8)``, or None."""
    if m == 0:
        return None
    k, rest = 0, m
    while rest % 4 == 0:
        rest //= 4
        k += 1
    return (k, rest) if rest % 8 == 7 else None


def is_in_I1(m: int) -> bool:
    return is_square(m)


def is_in_I2(m: int) -> bool:
    return fermat_obstruction(m) is None


def is_in_I3(m: int) -> bool:
    return legendre_obstruction(m) is None


def _min_two(rest: int, lo: int) -> Optional[Tuple[int, int]]:
    # smallest b >= lo with rest - b^2 = c^2 and c >= b
    for b in range(lo, isqrt(rest // 2) + 1):
        c2 = rest - b * b
        c = isqrt(c2)
        if c * c == c2:
            return b, c
    return None


def _min_three(rest: int, lo: int) -> Optional[Tuple[int, int, int]]:
    for a in range(lo, isqrt(rest // 3) + 1):
        tail = rest - a * a
        if not is_in_I2(tail):
            continue
        pair = _min_two(tail, a)
        if pair is not None:
            return (a,) + pair
    return None


def decompose_two_squares(m: int) -> SquareDecomposition:
    if not is_in_I2(m):
        raise NotRepresentable(m, 2, f"prime {fermat_obstruction(m)} odd exponent")
    pair = _min_two(m, 0)
    assert pair is not None, "Fermat criterion and search disagree"
    return SquareDecomposition(pair, m)


def decompose_three_squares(m: int) -> SquareDecomposition:
    if not is_in_I3(m):
        k, l = legendre_obstruction(m)
        raise NotRepresentable(m, 3, f"{m} = 4^{k}*{l}, {l} = 7 mod 8")
    triple = _min_three(m, 0)
    assert triple is not None, "Legendre criterion and search disagree"
    return SquareDecomposition(triple, m)


def decompose_four_squares(m: int) -> SquareDecomposition:
    """Canonical four-square decomposition; defined for every m >= 0."""
    if m < 0:
        raise ValueError("negative integer")
    for a in range(isqrt(m // 4) + 1):
        tail = m - a * a
        # a triple with entries >= a needs tail >= 3a^2
        if tail < 3 * a * a or not is_in_I3(tail):
            continue
        triple = _min_three(tail, a)
        if triple is not None:
            return SquareDecomposition((a,) + triple, m)
    raise AssertionError(f"Lagrange totality failed for {m}")


def decompose_n_squares(m: int, n: int) -> SquareDecomposition:
    """Canonical representation of ``m`` as a sum of ``n`` squares.

    For ``n >= 4`` the four-square decomposition is left-padded with zeros.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if m < 0:
        raise ValueError("negative integer")
    if n == 1:
        if not is_square(m):
            raise NotRepresentable(m, 1, "not a perfect square")
        return SquareDecomposition((isqrt(m),), m)
    if n == 2:
        return decompose_two_squares(m)
    if n == 3:
        return decompose_three_squares(m)
    four = decompose_four_squares(m)
    return SquareDecomposition((0,) * (n - 4) + four.terms, m)
