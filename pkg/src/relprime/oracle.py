"""Ground-truth subset enumeration at desk scale.

Every counting formula in the package can be cross-checked against a
plain scan of all 2^n - 1 nonempty subsets of {1,...,n}.  Subsets are
machine-word bitmasks: bit i set means element i + 1 is in the set, so
the value of an isolated low bit is just its bit_length().  The running
gcd stops early once it hits 1, which is absorbing.

The point of this module is to be obviously correct, not fast; the hard
ceiling ORACLE_MAX keeps a mistyped argument from launching a 2^40 run.
"""

from __future__ import annotations

from math import gcd

ORACLE_MAX = 26


def _check_n(n: int) -> None:
    if not 1 <= n <= ORACLE_MAX:
        raise ValueError(f"oracle enumeration requires 1 <= n <= {ORACLE_MAX}, got {n}")


def enumerate_relprime(n: int) -> int:
    """Count nonempty subsets of {1,...,n} with gcd 1, by enumeration."""
    _check_n(n)
    count = 0
    for mask in range(1, 1 << n):
        g = 0
        m = mask
        while m:
            low = m & -m
            g = gcd(g, low.bit_length())
            if g == 1:
                count += 1
                break
            m ^= low
    return count


def enumerate_relprime_k(n: int, k: int) -> int:
    """Count k-element subsets of {1,...,n} with gcd 1, by enumeration."""
    _check_n(n)
    if k < 1:
        raise ValueError("cardinality k must be >= 1")
    count = 0
    for mask in range(1, 1 << n):
        if mask.bit_count() != k:
            continue
        g = 0
        m = mask
        while m:
            low = m & -m
            g = gcd(g, low.bit_length())
            if g == 1:
                count += 1
                break
            m ^= low
    return count


def enumerate_subset_phi(n: int) -> int:
    """Count nonempty subsets whose gcd is coprime to n, by enumeration."""
    _check_n(n)
    count = 0
    for mask in range(1, 1 << n):
        h = n  # gcd(h, elements...) ends at gcd(gcd(A), n)
        m = mask
        while m:
            low = m & -m
            h = gcd(h, low.bit_length())
            if h == 1:
                break
            m ^= low
        if h == 1:
            count += 1
    return count


def enumerate_subset_phi_k(n: int, k: int) -> int:
    """Cardinality-k restriction of enumerate_subset_phi."""
    _check_n(n)
    if k < 1:
        raise ValueError("cardinality k must be >= 1")
    count = 0
    for mask in range(1, 1 << n):
        if mask.bit_count() != k:
            continue
        h = n
        m = mask
        while m:
            low = m & -m
            h = gcd(h, low.bit_length())
            if h == 1:
                break
            m ^= low
        if h == 1:
            count += 1
    return count


def enumerate_subset_psi(n: int, d: int) -> int:
    """Count nonempty subsets with gcd(gcd(A), n) = d, by enumeration.

    Requires d | n: the shared gcd always divides n.
    """
    _check_n(n)
    if d < 1 or n % d != 0:
        raise ValueError(f"enumerate_subset_psi requires d | n; got d={d}, n={n}")
    count = 0
    for mask in range(1, 1 << n):
        h = n
        m = mask
        while m:
            low = m & -m
            h = gcd(h, low.bit_length())
            if h == 1:
                break
            m ^= low
        if h == d:
            count += 1
    return count


def enumerate_count_by_gcd(n: int, d: int) -> int:
    """Count nonempty subsets of {1,...,n} with gcd exactly d."""
    _check_n(n)
    if not 1 <= d <= n:
        raise ValueError(f"enumerate_count_by_gcd requires 1 <= d <= n, got d={d}")
    count = 0
    for mask in range(1, 1 << n):
        g = 0
        m = mask
        while m:
            low = m & -m
            g = gcd(g, low.bit_length())
            if g == 1:
                break
            m ^= low
        if g == d:
            count += 1
    return count
