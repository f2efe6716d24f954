"""Exact number-theoretic primitives shared by the counting modules.

Everything here is plain integer arithmetic: Python ints are arbitrary
precision, so counts on the order of 2^10000 need no special handling.
No floating point appears anywhere in a counting path.
"""

from __future__ import annotations

import math
from typing import Iterable


class MobiusTable:
    """Mobius function values mu(1..limit), sieved once, read-only after.

    mu(n) = 1 if n = 1, 0 if a squared prime divides n, else (-1)^r where
    r is the number of distinct prime factors.  Safe to share between
    threads: the value tuple is never mutated after construction.
    """

    __slots__ = ("limit", "_values")

    def __init__(self, limit: int, values: tuple[int, ...]):
        self.limit = limit
        self._values = values

    def mu(self, d: int) -> int:
        if not 1 <= d <= self.limit:
            raise ValueError(f"mu({d}) outside sieved range 1..{self.limit}")
        return self._values[d]

    def __getitem__(self, d: int) -> int:
        return self.mu(d)

    def __len__(self) -> int:
        return self.limit

    def __repr__(self) -> str:
        return f"MobiusTable(limit={self.limit})"


def mobius_sieve(limit: int) -> MobiusTable:
    """Sieve mu(1..limit) with a linear prime sieve.

    Rejects limit = 0; cost is O(limit) time and memory.
    """
    if limit < 1:
        raise ValueError("sieve limit must be >= 1")
    mu = [0] * (limit + 1)
    mu[1] = 1
    composite = bytearray(limit + 1)
    primes: list[int] = []
    for i in range(2, limit + 1):
        if not composite[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            ip = i * p
            if ip > limit:
                break
            composite[ip] = 1
            if i % p == 0:
                mu[ip] = 0  # p^2 divides ip
                break
            mu[ip] = -mu[i]
    return MobiusTable(limit, tuple(mu))


# One table per process, grown geometrically so that evaluating an
# ascending range of arguments does not re-sieve at every step.
_shared: MobiusTable | None = None


def shared_mobius(limit: int) -> MobiusTable:
    """Return a process-wide table covering at least 1..limit."""
    global _shared
    tab = _shared
    if tab is None or tab.limit < limit:
        grown = limit if tab is None else max(limit, 2 * tab.limit)
        tab = mobius_sieve(grown)
        _shared = tab
    return tab


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    if n < 1:
        raise ValueError("divisors requires n >= 1")
    small: list[int] = []
    large: list[int] = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    large.reverse()
    return small + large


def binomial(n: int, k: int) -> int:
    """C(n, k) exactly; 0 whenever k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be nonnegative")
    return math.comb(n, k)


def pow2_minus_1(e: int) -> int:
    """2^e - 1 exactly (0 when e = 0)."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    return (1 << e) - 1


def gcd_set(elements: Iterable[int]) -> int:
    """gcd of all elements, taken over absolute values.

    gcd({0}) is 0.  Rejects the empty set.  Sets may contain negative
    integers; the gcd ignores signs so that dilation by -1 is neutral.
    """
    g = None
    for v in elements:
        g = abs(v) if g is None else math.gcd(g, v)
        if g == 1:
            break
    if g is None:
        raise ValueError("gcd of the empty set is undefined")
    return g


def euler_phi(n: int) -> int:
    """Count of 1 <= a <= n with gcd(a, n) = 1, by trial factorization."""
    if n < 1:
        raise ValueError("euler_phi requires n >= 1")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1 if p == 2 else 2
    if m > 1:
        result -= result // m
    return result
