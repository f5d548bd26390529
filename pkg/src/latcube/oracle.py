"""Exhaustive search for cube frames in Z^n, independent of the classification.

Vectors of a given squared norm are listed in lexicographic order. A frame
is a set of ``d`` pairwise-orthogonal such vectors; frames are always
written with rows in increasing lexicographic order, and frame counts refer
to that convention (each unordered set counted once).
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import isqrt
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .classify import DimensionPair
from .construct import CubeWitness
from .errors import BudgetExceeded

LatticeVector = Tuple[int, ...]

MAX_ENUM_DIM = 8
# int64 dot products of norm-m vectors are bounded by m
_INT64_SAFE = 2**62


@dataclass(frozen=True)
class SearchBudget:
    max_norm: int = 60
    max_dim: int = 6
    max_frames: Optional[int] = 10**6

    def __post_init__(self):
        if self.max_norm < 1 or self.max_dim < 1:
            raise ValueError("budget limits must be positive")
        if self.max_frames is not None and self.max_frames < 1:
            raise ValueError("max_frames must be at least 1")


DEFAULT_BUDGET = SearchBudget()


def _check(m: int, n: int, budget: SearchBudget, max_dim: int) -> None:
    if m < 0 or n < 1:
        raise ValueError("need m >= 0 and n >= 1")
    if m > budget.max_norm:
        raise BudgetExceeded(f"m={m} exceeds max_norm={budget.max_norm}")
    if n > max_dim:
        raise BudgetExceeded(f"n={n} exceeds the dimension limit {max_dim}")
    if m >= _INT64_SAFE:
        raise BudgetExceeded("norm too large for exact int64 search")


def _vectors(m: int, n: int) -> List[LatticeVector]:
    out: List[LatticeVector] = []
    prefix = [0] * n

    def rec(i: int, rest: int) -> None:
        if i == n - 1:
            r = isqrt(rest)
            if r * r == rest:
                prefix[i] = -r
                out.append(tuple(prefix))
                if r:
                    prefix[i] = r
                    out.append(tuple(prefix))
            return
        r = isqrt(rest)
        for x in range(-r, r + 1):
            prefix[i] = x
            rec(i + 1, rest - x * x)

    rec(0, m)
    return out


def enumerate_norm_vectors(m: int, n: int, budget: SearchBudget = DEFAULT_BUDGET) -> List[LatticeVector]:
    """All v in Z^n with |v|^2 = m, in lexicographic order."""
    _check(m, n, budget, MAX_ENUM_DIM)
    return _vectors(m, n)


def _orbit_key(v: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sorted(abs(x) for x in v))


class _Search:
    """Backtracking over index sets of a fixed vector list."""

    def __init__(self, vectors: List[LatticeVector], n: int):
        self.vectors = vectors
        self.arr = np.array(vectors, dtype=np.int64).reshape(len(vectors), n)

    def orthogonal(self, cand: np.ndarray, j: int) -> np.ndarray:
        return cand[self.arr[cand] @ self.arr[j] == 0]

    def first(self, cand: np.ndarray, need: int) -> Optional[List[int]]:
        if need == 0:
            return []
        for pos in range(len(cand) - need + 1):
            j = int(cand[pos])
            rest = self.orthogonal(cand[pos + 1 :], j) if need > 1 else cand[:0]
            if len(rest) < need - 1:
                continue
            sub = self.first(rest, need - 1)
            if sub is not None:
                return [j] + sub
        return None

    def count(self, cand: np.ndarray, need: int, cap: Optional[int]) -> int:
        if need == 0:
            return 1
        if need == 1:
            return len(cand) if cap is None else min(len(cand), cap)
        total = 0
        for pos in range(len(cand) - need + 1):
            rest = self.orthogonal(cand[pos + 1 :], int(cand[pos]))
            if len(rest) < need - 1:
                continue
            total += self.count(rest, need - 1, None if cap is None else cap - total)
            if cap is not None and total >= cap:
                return cap
        return total


def _orbit_representatives(vectors: List[LatticeVector]) -> List[int]:
    seen = set()
    reps = []
    for i, v in enumerate(vectors):
        key = _orbit_key(v)
        if key not in seen:
            seen.add(key)
            reps.append(i)
    return reps


def _frame_through(args) -> Optional[List[LatticeVector]]:
    vectors, rep, d = args
    s = _Search(vectors, len(vectors[rep]))
    everything = np.arange(len(vectors))
    cand = s.orthogonal(everything[everything != rep], rep)
    rest = s.first(cand, d - 1)
    if rest is None:
        return None
    return sorted(vectors[i] for i in [rep] + rest)


def _count_from(args) -> int:
    vectors, first, d, cap = args
    s = _Search(vectors, len(vectors[first]))
    cand = s.orthogonal(np.arange(first + 1, len(vectors)), first)
    if len(cand) < d - 1:
        return 0
    return s.count(cand, d - 1, cap)


def _map(fn, jobs, threads: int):
    if threads <= 1 or len(jobs) <= 1:
        yield from map(fn, jobs)
        return
    pool = ProcessPoolExecutor(max_workers=threads)
    try:
        futures = [pool.submit(fn, job) for job in jobs]
        for fut in futures:
            yield fut.result()
    finally:
        # results are consumed in submission order, so stopping early is safe
        pool.shutdown(wait=True, cancel_futures=True)


def oracle_is_member(
    m: int, p, budget: SearchBudget = DEFAULT_BUDGET, threads: int = 1
) -> Tuple[bool, Optional[CubeWitness]]:
    """Decide by exhaustive search whether a d-frame of norm m exists in Z^n.

    Any frame can be moved by a signed coordinate permutation so that one of
    its rows becomes an orbit representative, so only representatives are
    tried as the distinguished row; the remaining rows are searched in
    increasing lexicographic order. Representatives are tried in
    lexicographic order and the first success wins, also when the
    representatives are farmed out to worker processes.
    """
    p = p if isinstance(p, DimensionPair) else DimensionPair(*p)
    d, n = p.d, p.n
    _check(m, n, budget, budget.max_dim)
    if m == 0:
        return True, CubeWitness(0, d, n, [(0,) * n] * d)
    vectors = _vectors(m, n)
    if len(vectors) < d:
        return False, None
    jobs = [(vectors, rep, d) for rep in _orbit_representatives(vectors)]
    if threads <= 1:
        for job in jobs:
            frame = _frame_through(job)
            if frame is not None:
                return True, CubeWitness(m, d, n, frame)
        return False, None
    for frame in _map(_frame_through, jobs, threads):
        if frame is not None:
            return True, CubeWitness(m, d, n, frame)
    return False, None


def count_frames(m: int, d: int, n: int, budget: SearchBudget = DEFAULT_BUDGET, threads: int = 1) -> int:
    """Number of d-frames of norm m in Z^n, capped at ``budget.max_frames``.

    The all-zero frame counts as the single frame for m = 0.
    """
    DimensionPair(d, n)
    _check(m, n, budget, budget.max_dim)
    if m == 0:
        return 1
    cap = budget.max_frames
    vectors = _vectors(m, n)
    if d == 1:
        return len(vectors) if cap is None else min(len(vectors), cap)
    jobs = [(vectors, i, d, cap) for i in range(len(vectors) - d + 1)]
    total = 0
    for c in _map(_count_from, jobs, threads):
        total += c
        if cap is not None and total >= cap:
            return cap
    return total


def iter_frames(m: int, d: int, n: int, budget: SearchBudget = DEFAULT_BUDGET) -> Iterator[Tuple[LatticeVector, ...]]:
    """Yield every d-frame of norm m > 0 in Z^n, rows increasing, in lexicographic order."""
    DimensionPair(d, n)
    _check(m, n, budget, MAX_ENUM_DIM)
    vectors = _vectors(m, n)
    s = _Search(vectors, n)

    def rec(cand: np.ndarray, need: int, chosen: List[int]):
        if need == 0:
            yield tuple(vectors[i] for i in chosen)
            return
        for pos in range(len(cand) - need + 1):
            j = int(cand[pos])
            rest = s.orthogonal(cand[pos + 1 :], j)
            yield from rec(rest, need - 1, chosen + [j])

    if m > 0:
        yield from rec(np.arange(len(vectors)), d, [])


@dataclass(frozen=True)
class CensusRow:
    m: int
    member: bool
    frames: int
    capped: bool


def census(d: int, n: int, m_max: int, budget: SearchBudget = DEFAULT_BUDGET, threads: int = 1) -> List[CensusRow]:
    if m_max < 0:
        raise ValueError("m_max must be non-negative")
    _check(m_max, n, budget, budget.max_dim)
    rows = []
    for m in range(m_max + 1):
        c = count_frames(m, d, n, budget, threads)
        rows.append(CensusRow(m, c > 0, c, budget.max_frames is not None and c >= budget.max_frames))
    return rows
