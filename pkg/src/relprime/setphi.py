"""A phi function for subsets of {1,...,n}.

subset_phi(n) counts the nonempty A within {1,...,n} whose gcd is
relatively prime to n; subset_phi_k restricts to |A| = k.  These
generalize Euler's phi: subset_phi_k(n, 1) = euler_phi(n).

For n >= 2 the divisor Mobius sums apply:

    subset_phi(n)      = sum_{d|n} mu(d) * 2^(n/d)
    subset_phi_k(n, k) = sum_{d|n} mu(d) * C(n/d, k)

and n = 1 is a hard-coded special case (the unrestricted formula gives
2 there because sum_{d|1} mu(d) = 1 instead of 0).  The divisor-sum
identities

    sum_{d|n} subset_phi(d)   = 2^n - 1
    sum_{d|n} subset_phi_k(d) = C(n, k)

are exposed as verification checks.  subset_psi(n, d) counts subsets
by the gcd they share with n and reduces to subset_phi(n/d).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arith import binomial, divisors, shared_mobius


@dataclass(frozen=True)
class PhiReport:
    """A subset-phi value split into its leading term and residual.

    value = main_term + residual always holds; main_term is 2^n for odd
    n and 2^n - 2^(n/2) for even n (binomial analogues when k is set).
    """

    n: int
    k: int | None
    value: int
    main_term: int
    residual: int


@lru_cache(maxsize=None)
def subset_phi(n: int) -> int:
    """Count of nonempty subsets of {1,...,n} whose gcd is coprime to n."""
    if n < 1:
        raise ValueError("subset_phi requires n >= 1")
    if n == 1:
        return 1
    tab = shared_mobius(n)
    total = 0
    for d in divisors(n):
        mu = tab.mu(d)
        if mu:
            q, r = divmod(n, d)
            assert r == 0
            total += mu * (1 << q)
    return total


@lru_cache(maxsize=None)
def subset_phi_k(n: int, k: int) -> int:
    """Count of k-element subsets of {1,...,n} whose gcd is coprime to n."""
    if n < 1 or k < 1:
        raise ValueError("subset_phi_k requires n >= 1 and k >= 1")
    if n == 1:
        # {1} is the only nonempty subset of {1}.
        return 1 if k == 1 else 0
    tab = shared_mobius(n)
    total = 0
    for d in divisors(n):
        mu = tab.mu(d)
        if mu:
            q, r = divmod(n, d)
            assert r == 0
            total += mu * binomial(q, k)
    return total


def subset_psi(n: int, d: int) -> int:
    """Count of nonempty A within {1,...,n} with gcd(A united {n}) = d.

    Requires d | n.  Dividing every element by d bijects these subsets
    onto the ones counted by subset_phi(n/d).
    """
    if n < 1 or d < 1:
        raise ValueError("subset_psi requires n >= 1 and d >= 1")
    if n % d != 0:
        raise ValueError(f"subset_psi requires d | n; {d} does not divide {n}")
    return subset_phi(n // d)


def verify_divisor_sum(n: int) -> bool:
    """True iff sum_{d|n} subset_phi(d) = 2^n - 1 exactly."""
    if n < 1:
        raise ValueError("verify_divisor_sum requires n >= 1")
    return sum(subset_phi(d) for d in divisors(n)) == (1 << n) - 1


def verify_divisor_sum_k(n: int, k: int) -> bool:
    """True iff sum_{d|n} subset_phi_k(d, k) = C(n, k) exactly."""
    if n < 1 or k < 1:
        raise ValueError("verify_divisor_sum_k requires n >= 1 and k >= 1")
    return sum(subset_phi_k(d, k) for d in divisors(n)) == binomial(n, k)


def asymptotic_report(n: int) -> PhiReport:
    """subset_phi(n) against its leading term.

    main_term is 2^n for odd n, 2^n - 2^(n/2) for even n; the residual
    satisfies |residual| <= residual_bound(n) (checked by callers).
    """
    if n < 1:
        raise ValueError("asymptotic_report requires n >= 1")
    main = (1 << n) if n % 2 else (1 << n) - (1 << (n // 2))
    value = subset_phi(n)
    return PhiReport(n=n, k=None, value=value, main_term=main, residual=value - main)


def asymptotic_report_k(n: int, k: int) -> PhiReport:
    """subset_phi_k(n, k) against its leading term (binomial analogue)."""
    if n < 1 or k < 1:
        raise ValueError("asymptotic_report_k requires n >= 1 and k >= 1")
    main = binomial(n, k)
    if n % 2 == 0:
        main -= binomial(n // 2, k)
    value = subset_phi_k(n, k)
    return PhiReport(n=n, k=k, value=value, main_term=main, residual=value - main)


def residual_bound(n: int) -> int:
    """Envelope n * 2^ceil(n/3) for the subset_phi residual.

    Dropping the one or two leading divisor terms leaves fewer than n
    terms, each at most 2^(n/3); the ceiling keeps the bound an integer
    power of two when 3 does not divide n.
    """
    if n < 1:
        raise ValueError("residual_bound requires n >= 1")
    return n << ((n + 2) // 3)


def residual_bound_k(n: int, k: int) -> int:
    """Envelope n * C([n/3], k) for the subset_phi_k residual."""
    if n < 1 or k < 1:
        raise ValueError("residual_bound_k requires n >= 1 and k >= 1")
    return n * binomial(n // 3, k)
