"""Which squared side lengths occur for d-cubes with vertices in Z^n.

The answer depends only on ``d mod 4`` and ``min(n - d, 3)`` and is always
one of four sets: perfect squares (I1), sums of two squares (I2), sums of
three squares (I3), or every non-negative integer (N0).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidDimensions
from .exact import is_square
from .squares import fermat_obstruction, legendre_obstruction


class SetDescriptor(str, enum.Enum):
    I1 = "I1"
    I2 = "I2"
    I3 = "I3"
    N0 = "N0"

    def __str__(self):
        return self.value


class Criterion(str, enum.Enum):
    NON_SQUARE = "non-square"
    FERMAT = "fermat"
    LEGENDRE = "legendre"


@dataclass(frozen=True)
class DimensionPair:
    d: int
    n: int

    def __post_init__(self):
        if self.d < 1 or self.d > self.n:
            raise InvalidDimensions(f"need 1 <= d <= n, got d={self.d}, n={self.n}")


# keyed by (d mod 4, min(n - d, 3)); absent cells are N0
_TABLE = {
    (1, 0): SetDescriptor.I1,
    (3, 0): SetDescriptor.I1,
    (2, 0): SetDescriptor.I2,
    (2, 1): SetDescriptor.I2,
    (1, 1): SetDescriptor.I2,
    (1, 2): SetDescriptor.I3,
}


def _pair(p) -> DimensionPair:
    if isinstance(p, DimensionPair):
        return p
    d, n = p
    return DimensionPair(d, n)


def table_coordinates(p) -> tuple[int, int]:
    p = _pair(p)
    return p.d % 4, p.n - p.d


def descriptor_for(p) -> SetDescriptor:
    """Descriptor of J(d, n). Accepts a DimensionPair or a ``(d, n)`` tuple."""
    p = _pair(p)
    return _TABLE.get((p.d % 4, min(p.n - p.d, 3)), SetDescriptor.N0)


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    descriptor: SetDescriptor
    criterion: Optional[Criterion] = None
    reason: str = ""

    def __bool__(self):
        return self.member


def _refute(m: int, desc: SetDescriptor) -> Optional[tuple[Criterion, str]]:
    if desc is SetDescriptor.I1 and not is_square(m):
        return Criterion.NON_SQUARE, f"I1 violation: {m} is not a perfect square"
    if desc is SetDescriptor.I2:
        p = fermat_obstruction(m)
        if p is not None:
            return Criterion.FERMAT, f"I2 violation: prime {p} odd exponent"
    if desc is SetDescriptor.I3:
        hit = legendre_obstruction(m)
        if hit is not None:
            k, l = hit
            return Criterion.LEGENDRE, f"I3 violation: {m} = 4^{k}*{l} with {l} = 7 mod 8"
    return None


def is_member(m: int, p) -> MembershipVerdict:
    if m < 0:
        raise ValueError("side length squared must be non-negative")
    desc = descriptor_for(p)
    refutation = _refute(m, desc)
    if refutation is None:
        return MembershipVerdict(True, desc)
    criterion, reason = refutation
    return MembershipVerdict(False, desc, criterion, reason)
