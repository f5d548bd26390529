"""Explicit integer cube frames.

A frame is stored as the ``d`` edge vectors leaving one vertex. Base frames
cover ``d <= 4``; larger ``d`` is reached by appending 4x4 quaternion blocks
along the diagonal.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from .classify import DimensionPair, is_member
from .errors import DimensionMismatch, NotMember, TooLarge, WitnessParseError
from .exact import int_sqrt
from .squares import decompose_four_squares, decompose_n_squares, decompose_two_squares

LatticeVector = Tuple[int, ...]

MAX_EXPAND_DIM = 20


@dataclass(frozen=True)
class CubeWitness:
    """Edge frame of a cube; shape is checked here, geometry by verify_witness."""

    m: int
    d: int
    n: int
    rows: Tuple[LatticeVector, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))

    def matrix(self) -> List[List[int]]:
        return [list(r) for r in self.rows]


def _dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def _pad(row: Sequence[int], left: int, width: int) -> LatticeVector:
    out = [0] * width
    out[left : left + len(row)] = row
    return tuple(out)


def quaternion_basis(a: int, b: int, c: int, d: int) -> CubeWitness:
    """Rows q, qi, qj, qk of the quaternion q = a + bi + cj + dk.

    Each row has squared norm a^2 + b^2 + c^2 + d^2 and the rows are pairwise
    orthogonal for every integer input.
    """
    rows = (
        (a, b, c, d),
        (-b, a, d, -c),
        (-c, -d, a, b),
        (-d, c, -b, a),
    )
    return CubeWitness(a * a + b * b + c * c + d * d, 4, 4, rows)


def canonical_quaternion(m: int) -> CubeWitness:
    # largest entries first, so the leading coordinates carry the weight
    a, b, c, d = reversed(decompose_four_squares(m).terms)
    return quaternion_basis(a, b, c, d)


def base_witness(m: int, d: int, slack: int) -> CubeWitness:
    """Frame for 1 <= d <= 4 in ambient dimension ``d + slack``."""
    if not 1 <= d <= 4:
        raise ValueError("base frames exist for 1 <= d <= 4 only")
    if slack < 0:
        raise ValueError("slack must be non-negative")
    n = d + slack
    verdict = is_member(m, (d, n))
    if not verdict.member:
        raise NotMember(verdict)
    s = min(slack, 3)
    if d == 1:
        rows = [tuple(reversed(decompose_n_squares(m, 1 + s).terms))]
    elif d == 2 and s <= 1:
        a, b = reversed(decompose_two_squares(m).terms)
        rows = [(a, b), (-b, a)]
    elif d == 3 and s == 0:
        root, _ = int_sqrt(m)
        rows = [(root, 0, 0), (0, root, 0), (0, 0, root)]
    else:
        rows = list(canonical_quaternion(m).rows[:d])
    return CubeWitness(m, d, n, [_pad(r, 0, n) for r in rows])


def construct_witness(m: int, p) -> CubeWitness:
    """Integer frame of ``d`` orthogonal vectors of squared norm ``m`` in Z^n."""
    p = p if isinstance(p, DimensionPair) else DimensionPair(*p)
    verdict = is_member(m, p)
    if not verdict.member:
        raise NotMember(verdict)
    d, n = p.d, p.n
    r = (d - 1) % 4 + 1
    blocks = (d - r) // 4
    base = base_witness(m, r, n - d)
    rows = [_pad(row, 0, n) for row in base.rows]
    if blocks:
        quat = canonical_quaternion(m).rows
        offset = base.n
        for _ in range(blocks):
            rows.extend(_pad(row, offset, n) for row in quat)
            offset += 4
    return CubeWitness(m, d, n, rows)


def extend_by_quaternion(w: CubeWitness) -> CubeWitness:
    """Direct sum with the canonical 4x4 block: a (d+4, n+4) frame."""
    quat = canonical_quaternion(w.m).rows
    n = w.n + 4
    rows = [_pad(r, 0, n) for r in w.rows] + [_pad(r, w.n, n) for r in quat]
    return CubeWitness(w.m, w.d + 4, n, rows)


@dataclass
class VerificationReport:
    valid: bool
    shape_ok: bool
    integral: bool
    dots: Dict[Tuple[int, int], object] = field(default_factory=dict)
    norm_defects: List[object] = field(default_factory=list)
    problems: List[str] = field(default_factory=list)


def verify_witness(w: CubeWitness) -> VerificationReport:
    problems = []
    shape_ok = len(w.rows) == w.d and all(len(r) == w.n for r in w.rows) and 1 <= w.d <= w.n
    if not shape_ok:
        problems.append(f"shape: expected {w.d} rows of length {w.n}")
    integral = all(
        isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1)
        for r in w.rows
        for x in r
    )
    if not integral:
        problems.append("non-integral entry")
    defects = [_dot(r, r) - w.m for r in w.rows]
    for i, dd in enumerate(defects):
        if dd:
            problems.append(f"row {i}: norm {dd + w.m} != {w.m}")
    dots = {(i, j): _dot(w.rows[i], w.rows[j]) for i, j in combinations(range(len(w.rows)), 2)}
    for (i, j), v in dots.items():
        if v:
            problems.append(f"rows {i},{j}: dot product {v}")
    return VerificationReport(not problems, shape_ok, integral, dots, defects, problems)


def expand_cube(w: CubeWitness, anchor: Sequence[int]) -> List[LatticeVector]:
    """All 2**d vertices; vertex k adds the rows whose bit is set in k."""
    if len(anchor) != w.n:
        raise DimensionMismatch(f"anchor has length {len(anchor)}, expected {w.n}")
    if w.d > MAX_EXPAND_DIM:
        raise TooLarge(f"d={w.d} exceeds {MAX_EXPAND_DIM}")
    out = []
    for k in range(1 << w.d):
        v = list(anchor)
        for i, row in enumerate(w.rows):
            if k >> i & 1:
                for j, x in enumerate(row):
                    v[j] += x
        out.append(tuple(v))
    return out


def format_witness(w: CubeWitness) -> str:
    lines = [f"{w.d} {w.n} {w.m}"]
    lines += [" ".join(str(x) for x in row) for row in w.rows]
    return "\n".join(lines) + "\n"


def _ints(line: str, lineno: int) -> List[int]:
    out = []
    col = 1
    for tok in line.split(" "):
        if tok == "":
            col += 1
            continue
        try:
            out.append(int(tok, 10))
        except ValueError:
            raise WitnessParseError(f"not an integer: {tok!r}", lineno, col) from None
        col += len(tok) + 1
    return out


def parse_witness(text: str) -> CubeWitness:
    """Inverse of format_witness. Shape errors raise WitnessParseError."""
    lines = text.split("\n")
    while lines and lines[-1].strip() == "":
        lines.pop()
    if not lines:
        raise WitnessParseError("empty input", 1)
    header = _ints(lines[0], 1)
    if len(header) != 3:
        raise WitnessParseError(f"header needs 'd n m', got {len(header)} fields", 1)
    d, n, m = header
    if d < 1 or n < d or m < 0:
        raise WitnessParseError("header requires 1 <= d <= n and m >= 0", 1)
    body = lines[1:]
    if len(body) != d:
        raise WitnessParseError(f"expected {d} rows, found {len(body)}", len(body) + 2 if len(body) < d else d + 2)
    rows = []
    for k, line in enumerate(body, start=2):
        row = _ints(line, k)
        if len(row) != n:
            raise WitnessParseError(f"expected {n} entries, found {len(row)}", k)
        rows.append(row)
    return CubeWitness(m, d, n, rows)
