"""Counts of relatively prime subsets of {1,...,n}.

A nonempty A within {1,...,n} is relatively prime when gcd(A) = 1.  The
number of such subsets, here count_relprime(n), satisfies

    count_relprime(n)      = sum_{d=1..n} mu(d) * (2^[n/d] - 1)
    count_relprime_k(n, k) = sum_{d=1..n} mu(d) * C([n/d], k)

with [x] the floor.  Both are evaluated by the explicit Mobius sums; the
self-referential recursions

    sum_{d=1..n} count_relprime([n/d])      = 2^n - 1
    sum_{d=1..n} count_relprime_k([n/d], k) = C(n, k)

are kept as verification checks, not as the evaluation path.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arith import binomial, shared_mobius


@dataclass(frozen=True)
class CountReport:
    """One computed count with its provenance and timing."""

    n: int
    count: int
    method: str  # "formula" or "oracle"
    elapsed: float  # seconds
    k: int | None = None
    d: int | None = None


@lru_cache(maxsize=None)
def count_relprime(n: int) -> int:
    """Number of nonempty subsets of {1,...,n} with gcd 1.

    O(n) big-integer terms.  Values repeat heavily across a range of
    arguments (the recursion checks evaluate [n/d] for every d), so
    results are memoized for the life of the process.
    """
    if n < 1:
        raise ValueError("count_relprime requires n >= 1")
    tab = shared_mobius(n)
    total = 0
    for d in range(1, n + 1):
        mu = tab.mu(d)
        if mu:
            total += mu * ((1 << (n // d)) - 1)
    return total


@lru_cache(maxsize=None)
def count_relprime_k(n: int, k: int) -> int:
    """Number of k-element subsets of {1,...,n} with gcd 1; 0 when k > n."""
    if n < 1 or k < 1:
        raise ValueError("count_relprime_k requires n >= 1 and k >= 1")
    tab = shared_mobius(n)
    total = 0
    for d in range(1, n + 1):
        mu = tab.mu(d)
        if mu:
            total += mu * binomial(n // d, k)
    return total


def sandwich_bounds(n: int) -> tuple[int, int]:
    """Endpoints 2^n - 2^[n/2] - n*2^[n/3] and 2^n - 2^[n/2].

    The count always lies between them; the lower endpoint can go
    negative for small n, in which case it is vacuous.
    """
    if n < 1:
        raise ValueError("sandwich_bounds requires n >= 1")
    upper = (1 << n) - (1 << (n // 2))
    lower = upper - n * (1 << (n // 3))
    return lower, upper


def sandwich_bounds_k(n: int, k: int) -> tuple[int, int]:
    """Endpoints C(n,k) - C([n/2],k) - n*C([n/3],k) and C(n,k) - C([n/2],k)."""
    if n < 1 or k < 1:
        raise ValueError("sandwich_bounds_k requires n >= 1 and k >= 1")
    upper = binomial(n, k) - binomial(n // 2, k)
    lower = upper - n * binomial(n // 3, k)
    return lower, upper


def verify_recursion(n: int) -> bool:
    """True iff sum_{d=1..n} count_relprime([n/d]) = 2^n - 1 exactly."""
    if n < 1:
        raise ValueError("verify_recursion requires n >= 1")
    total = 0
    for d in range(1, n + 1):
        total += count_relprime(n // d)
    return total == (1 << n) - 1


def verify_recursion_k(n: int, k: int) -> bool:
    """True iff sum_{d=1..n} count_relprime_k([n/d], k) = C(n, k) exactly."""
    if n < 1 or k < 1:
        raise ValueError("verify_recursion_k requires n >= 1 and k >= 1")
    total = 0
    for d in range(1, n + 1):
        total += count_relprime_k(n // d, k)
    return total == binomial(n, k)


def construction_lower_bound(n: int) -> int:
    """Constructive lower bound 2^(n-1) + 2^(n-2), valid for n >= 5.

    Obtained by counting subsets forced to be relatively prime by small
    elements: those containing 1, those containing 2 and 3 but not 1,
    and the two families built from {2,5} and {3,5}; the last two need
    5 in range, hence the n >= 5 precondition.
    """
    if n < 5:
        raise ValueError("construction_lower_bound requires n >= 5")
    return (1 << (n - 1)) + (1 << (n - 2))
