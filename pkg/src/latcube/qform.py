"""Diagonal quadratic forms over Q and the constructive equivalences between them."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import List, Sequence, Tuple

from .errors import DimensionMismatch, NotOrthogonal, PreconditionViolated, ZeroVector

RationalVector = Tuple[Fraction, ...]
Matrix = List[List[Fraction]]


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _vec(v: Sequence) -> RationalVector:
    return tuple(_q(x) for x in v)


def _dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


@dataclass(frozen=True)
class DiagonalForm:
    """The form sum(a_i * x_i**2), written <a_1, ..., a_n>."""

    entries: Tuple[Fraction, ...]

    def __init__(self, entries):
        entries = tuple(_q(a) for a in entries)
        if not entries:
            raise ValueError("a diagonal form needs at least one entry")
        object.__setattr__(self, "entries", entries)

    def __len__(self):
        return len(self.entries)

    def __add__(self, other):
        return direct_sum(self, other)

    def __rmul__(self, k: int):
        return DiagonalForm(self.entries * k)

    def __str__(self):
        return "<" + ",".join(str(a) for a in self.entries) + ">"

    def matrix(self) -> Matrix:
        n = len(self.entries)
        return [[self.entries[i] if i == j else Fraction(0) for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class EquivalenceWitness:
    """Claims ``transform^T * diag(source) * transform == diag(target)``."""

    source: DiagonalForm
    target: DiagonalForm
    transform: Tuple[Tuple[Fraction, ...], ...]

    def __init__(self, source, target, transform):
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "transform", tuple(_vec(r) for r in transform))


def direct_sum(f: DiagonalForm, g: DiagonalForm) -> DiagonalForm:
    return DiagonalForm(f.entries + g.entries)


def determinant(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    a = [list(map(_q, r)) for r in rows]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return det


def verify_equivalence(w: EquivalenceWitness) -> bool:
    n = len(w.source)
    A = w.transform
    if len(w.target) != n or len(A) != n or any(len(r) != n for r in A):
        raise DimensionMismatch("transform, source and target must share one dimension")
    if determinant(A) == 0:
        return False
    src = w.source.entries
    for i in range(n):
        for j in range(i, n):
            # (A^T D A)_{ij} = sum_k A_ki * s_k * A_kj
            v = sum((A[k][i] * src[k] * A[k][j] for k in range(n)), Fraction(0))
            if v != (w.target.entries[i] if i == j else 0):
                return False
    return True


def _check_orthogonal(rows: Sequence[RationalVector]) -> None:
    for i, v in enumerate(rows):
        if not any(v):
            raise ZeroVector(f"row {i} is zero")
        for j in range(i):
            if _dot(rows[j], v) != 0:
                raise NotOrthogonal(f"rows {j} and {i} are not orthogonal")


def basis_to_equivalence(rows: Sequence[Sequence]) -> EquivalenceWitness:
    """An orthogonal basis as an equivalence n<1> ~ <|v_1|^2, ..., |v_n|^2>."""
    rows = [_vec(r) for r in rows]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise DimensionMismatch("need n vectors of length n")
    _check_orthogonal(rows)
    columns = [[rows[j][i] for j in range(n)] for i in range(n)]
    return EquivalenceWitness(
        DiagonalForm([1] * n),
        DiagonalForm([_dot(r, r) for r in rows]),
        columns,
    )


def cross_product(v: Sequence, w: Sequence) -> RationalVector:
    if len(v) != 3 or len(w) != 3:
        raise DimensionMismatch("cross product needs two vectors of length 3")
    a, b, c = _vec(v)
    d, e, f = _vec(w)
    return (b * f - c * e, c * d - a * f, a * e - b * d)


def primitive(v: Sequence) -> Tuple[int, ...]:
    """Positive rational multiple of ``v`` with coprime integer entries."""
    v = _vec(v)
    den = reduce(lcm, (x.denominator for x in v), 1)
    ints = [int(x * den) for x in v]
    g = reduce(gcd, ints, 0)
    if g == 0:
        raise ZeroVector("zero vector has no primitive multiple")
    return tuple(x // g for x in ints)


def gram_schmidt_extend(rows: Sequence[Sequence]) -> Tuple[List[RationalVector], List[Fraction]]:
    """Complete orthogonal ``rows`` to an orthogonal basis of Q^n.

    Standard basis vectors are projected off the current span in order
    (dependent ones are skipped) and each survivor is scaled to a primitive
    integer vector. The last appended vector is oriented so the completed
    basis has positive determinant. Returns the basis and the squared norms
    of the appended vectors.
    """
    basis = [_vec(r) for r in rows]
    if not basis:
        raise DimensionMismatch("need at least one row")
    n = len(basis[0])
    if any(len(r) != n for r in basis) or len(basis) > n:
        raise DimensionMismatch("rows must share a length n >= their count")
    _check_orthogonal(basis)
    d = len(basis)
    for i in range(n):
        if len(basis) == n:
            break
        u = [Fraction(int(i == k)) for k in range(n)]
        for b in basis:
            coef = _dot(u, b) / _dot(b, b)
            u = [x - coef * y for x, y in zip(u, b)]
        if any(u):
            basis.append(_vec(primitive(u)))
    if len(basis) > d and determinant(basis) < 0:
        basis[-1] = tuple(-x for x in basis[-1])
    residuals = [_dot(b, b) for b in basis[d:]]
    return basis, residuals


def _equal_norm_pair(v: Sequence[int], w: Sequence[int]) -> int:
    if len(v) != 3 or len(w) != 3:
        raise PreconditionViolated("need two vectors in Z^3")
    m = _dot(v, v)
    if _dot(w, w) != m:
        raise PreconditionViolated(f"norms differ: {m} vs {_dot(w, w)}")
    if m == 0:
        raise PreconditionViolated("vectors must be nonzero")
    if _dot(v, w) != 0:
        raise PreconditionViolated("vectors are not orthogonal")
    return int(m)


def witt_extract_two_squares(v: Sequence[int], w: Sequence[int]) -> Tuple[Fraction, Fraction]:
    """Rational (x, y) with x^2 + y^2 = m from an orthogonal pair of norm m in Z^3.

    If b*d - a*e happens to equal m the second vector is negated first.
    """
    x, y, _ = witt_extract_detail(v, w)
    return x, y


def witt_extract_detail(v, w) -> Tuple[Fraction, Fraction, bool]:
    m = _equal_norm_pair(v, w)
    a, b, _c = v
    d, e, _f = w
    flipped = b * d - a * e == m
    if flipped:
        d, e = -d, -e
    den = b * d - a * e - m
    x = Fraction(m * (d - b), den)
    y = Fraction(m * (a + e), den)
    return x, y, flipped


def remark_identity_check(v: Sequence[int], w: Sequence[int]) -> bool:
    """Compare both sides of the cross-product identity coefficient by coefficient.

    Left: sum of squares of the linear forms x*v_i + y*w_i + z*(v x w)_i.
    Right: m*x^2 + m*y^2 + (m*z)^2.
    """
    m = _equal_norm_pair(v, w)
    cols = (_vec(v), _vec(w), cross_product(v, w))
    lhs = {
        (i, j): (1 if i == j else 2) * _dot(cols[i], cols[j])
        for i in range(3)
        for j in range(i, 3)
    }
    rhs = {(0, 0): m, (1, 1): m, (2, 2): m * m}
    return all(lhs[k] == rhs.get(k, 0) for k in lhs)


def cross_product_chain(v: Sequence[int], w: Sequence[int]) -> EquivalenceWitness:
    """<1,1,1> ~ <m,m,m^2> from an orthogonal pair of norm m, completed by v x w."""
    _equal_norm_pair(v, w)
    return basis_to_equivalence([v, w, cross_product(v, w)])
