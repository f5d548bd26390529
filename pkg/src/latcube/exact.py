"""Exact integer and rational primitives.

Every quantity in the package is either a Python ``int`` (``Natural`` when
non-negative) or a :class:`fractions.Fraction` (``Ratio``). Nothing here
touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from random import Random
from typing import List, Tuple

from .errors import ZeroInput

Natural = int
Ratio = Fraction
Factorization = List[Tuple[int, int]]

TRIAL_BOUND = 10**6
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def int_sqrt(m: int) -> tuple[int, bool]:
    """Return ``(floor(sqrt(m)), is_perfect_square)``."""
    if m < 0:
        raise ValueError("int_sqrt of a negative number")
    root = isqrt(m)
    return root, root * root == m


def is_square(m: int) -> bool:
    return m >= 0 and int_sqrt(m)[1]


@lru_cache(maxsize=1)
def _small_primes(bound: int = TRIAL_BOUND) -> tuple[int, ...]:
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, bound + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def is_prime(n: int) -> bool:
    """Miller-Rabin with fixed bases; deterministic for n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """Return a non-trivial factor of the odd composite ``n`` (Brent's variant)."""
    rng = Random(n)
    while True:
        y, c, step = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(step, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += step
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    f = _pollard_rho(n)
    _split(f, out)
    _split(n // f, out)


def factorize(m: int) -> Factorization:
    """Prime factorization of ``m >= 1`` as ``[(p, e), ...]`` with increasing p.

    >>> factorize(720)
    [(2, 4), (3, 2), (5, 1)]
    """
    if m == 0:
        raise ZeroInput("cannot factorize 0")
    if m < 0:
        raise ValueError("factorize expects a non-negative integer")
    found: dict[int, int] = {}
    rest = m
    cofactor_prime = False
    for i, p in enumerate(_small_primes()):
        if p * p > rest:
            cofactor_prime = True
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            found[p] = e
        # cheap exit once the cofactor is prime
        if i % 512 == 511 and is_prime(rest):
            cofactor_prime = True
            break
    if rest > 1:
        if cofactor_prime:
            found[rest] = found.get(rest, 0) + 1
        else:
            _split(rest, found)
    return sorted(found.items())
