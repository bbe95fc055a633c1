"""
Elementary number theory used by the divisor sums: divisors, the Moebius
function (single value and sieve), sigma(n) and a checked lcm.
"""

from __future__ import annotations

from math import gcd, isqrt
from typing import Iterable, Literal

MobiusValue = Literal[-1, 0, 1]

# Largest integer the kernel will produce; lcm_all refuses to go past it.
MAX_UINT = 2**64 - 1


def _check_positive(n: int, name: str = "n") -> None:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n}")


def divisors(n: int) -> list[int]:
    """Return the divisors of n in ascending order (trial division up to sqrt(n))."""
    _check_positive(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def mobius(n: int) -> MobiusValue:
    """
    Moebius function: 1 for n = 1, (-1)^r when n is a product of r distinct
    primes, 0 when a square of a prime divides n.
    """
    _check_positive(n)
    sign = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            sign = -sign
        p += 1
    if n > 1:
        sign = -sign
    return sign


def _mobius_table(K: int) -> list[int]:
    # linear sieve; slot 0 is a placeholder so that table[n] == mu(n)
    mu = [0] * (K + 1)
    mu[1] = 1
    composite = bytearray(K + 1)
    primes: list[int] = []
    for i in range(2, K + 1):
        if not composite[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            ip = i * p
            if ip > K:
                break
            composite[ip] = 1
            if i % p == 0:
                mu[ip] = 0
                break
            mu[ip] = -mu[i]
    return mu


def mobius_sieve(K: int) -> list[MobiusValue]:
    """
    mu(1), ..., mu(K) as a list of length K (entry n lives at index n - 1).

    >>> mobius_sieve(6)
    [1, -1, -1, 0, -1, 1]
    """
    _check_positive(K, "K")
    return _mobius_table(K)[1:]


def sum_of_divisors(n: int) -> int:
    _check_positive(n)
    return sum(divisors(n))


def lcm_all(values: Iterable[int]) -> int:
    """
    Least common multiple of a nonempty collection of positive integers.

    Raises OverflowError as soon as an intermediate result exceeds MAX_UINT
    instead of silently growing into a big integer.
    """
    values = list(values)
    if not values:
        raise ValueError("lcm_all needs at least one value")
    m = 1
    for v in values:
        _check_positive(v, "value")
        m = m // gcd(m, v) * v
        if m > MAX_UINT:
            raise OverflowError(f"lcm exceeds {MAX_UINT} (64-bit unsigned range)")
    return m
