"""Affine equivalence and invariants of finite integer sets.

Two finite sets of integers are affinely equivalent when one is a
rational dilation-plus-translation of the other (x*A + y with x != 0).
Every set with at least two elements has exactly two normalized forms
anchored at 0 with gcd 1, each the mirror image of the other; a
singleton normalizes to {0}.  Equivalence testing compares a designated
representative, the lexicographically smaller of the two forms.

Sumset and difference-set cardinalities are affine invariants, as is
the image size of any integer linear form evaluated over the set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable

from .arith import gcd_set

DIST_MAX_N = 20  # 2^(n+1) subsets of {0,...,n} are enumerated
LINEAR_FORM_MAX_TUPLES = 10_000_000

IntSet = tuple[int, ...]


def integer_set(elements: Iterable[int]) -> IntSet:
    """Normalize to a sorted duplicate-free tuple; rejects the empty set."""
    out = tuple(sorted(set(elements)))
    if not out:
        raise ValueError("integer set must be nonempty")
    return out


@dataclass(frozen=True)
class CanonicalForm:
    """The two normalized forms of an affine class plus one representative.

    base and mirror both start at 0 and have gcd 1 (for sets of size >= 2);
    mirror is the reflection max(base) - base.  representative is the
    lexicographically smaller of the two, the single object used for
    equivalence tests.
    """

    base: IntSet
    mirror: IntSet
    representative: IntSet


@dataclass(frozen=True)
class InvariantProfile:
    """Cardinalities of A+A and A-A, both affine invariants."""

    sumset_size: int
    difference_size: int


def affine_map(a: Iterable[int], x, y) -> IntSet:
    """Image x*A + y, which must consist of integers.

    x and y may be ints or fractions; x = 0 is rejected (the map must be
    injective) and any element with a non-integral image is reported.
    """
    elems = integer_set(a)
    x = Fraction(x)
    y = Fraction(y)
    if x == 0:
        raise ValueError("dilation factor x must be nonzero")
    image = []
    for e in elems:
        v = x * e + y
        if v.denominator != 1:
            raise ValueError(f"element {e} has non-integral image {v}")
        image.append(int(v))
    return tuple(sorted(image))


def canonical_form(a: Iterable[int]) -> CanonicalForm:
    """Normalize a set to its affine canonical pair.

    Size >= 2: translate the minimum to 0, divide by the gcd, and pair
    the result with its reflection.  Singletons normalize to {0}.
    """
    elems = integer_set(a)
    if len(elems) == 1:
        zero = (0,)
        return CanonicalForm(zero, zero, zero)
    origin = elems[0]
    shifted = tuple(e - origin for e in elems)
    g = gcd_set(shifted[1:])
    base = tuple(e // g for e in shifted)
    top = base[-1]
    mirror = tuple(top - e for e in reversed(base))
    return CanonicalForm(base, mirror, min(base, mirror))


def affinely_equivalent(a: Iterable[int], b: Iterable[int]) -> bool:
    """True iff some rational map x*A + y (x != 0) carries a onto b."""
    return canonical_form(a).representative == canonical_form(b).representative


def sumset(a: Iterable[int], b: Iterable[int]) -> IntSet:
    """Pairwise sums {x + y}, sorted and deduplicated."""
    ea, eb = integer_set(a), integer_set(b)
    return tuple(sorted({x + y for x in ea for y in eb}))


def difference_set(a: Iterable[int], b: Iterable[int]) -> IntSet:
    """Pairwise differences {x - y}, sorted and deduplicated."""
    ea, eb = integer_set(a), integer_set(b)
    return tuple(sorted({x - y for x in ea for y in eb}))


def linear_form_image(
    a: Iterable[int],
    coeffs: Iterable[int],
    offset: int = 0,
    max_tuples: int = LINEAR_FORM_MAX_TUPLES,
) -> IntSet:
    """Image {u_1*a_1 + ... + u_m*a_m + offset} over all m-tuples from a.

    Tuples range with repetition, so the expansion has |a|^m terms; the
    max_tuples ceiling guards against accidental blowups.
    """
    elems = integer_set(a)
    us = tuple(int(u) for u in coeffs)
    if not us:
        raise ValueError("coefficient list must be nonempty")
    if len(elems) ** len(us) > max_tuples:
        raise ValueError(
            f"{len(elems)}^{len(us)} tuples exceeds the ceiling of {max_tuples}"
        )
    values = {
        offset + sum(u * t for u, t in zip(us, tup))
        for tup in product(elems, repeat=len(us))
    }
    return tuple(sorted(values))


def invariant_profile(a: Iterable[int]) -> InvariantProfile:
    """card(A+A) and card(A-A) for the set a."""
    elems = integer_set(a)
    return InvariantProfile(
        sumset_size=len(sumset(elems, elems)),
        difference_size=len(difference_set(elems, elems)),
    )


def sumset_size_distribution(
    n: int,
    k: int | None = None,
    inequivalent_only: bool = False,
) -> dict[int, int]:
    """How many subsets of {0,...,n} have each sumset cardinality.

    Maps each attained card(A+A) to the number of nonempty subsets A of
    {0,...,n} attaining it; k restricts to |A| = k, and inequivalent_only
    counts each affine equivalence class once (via its representative).
    """
    if not 0 <= n <= DIST_MAX_N:
        raise ValueError(f"distribution requires 0 <= n <= {DIST_MAX_N}, got {n}")
    if k is not None and k < 1:
        raise ValueError("cardinality k must be >= 1")
    counts: dict[int, int] = {}
    seen: set[IntSet] = set()
    width = n + 1
    for mask in range(1, 1 << width):
        if k is not None and mask.bit_count() != k:
            continue
        a = tuple(i for i in range(width) if mask >> i & 1)
        if inequivalent_only:
            rep = canonical_form(a).representative
            if rep in seen:
                continue
            seen.add(rep)
        size = len({x + y for x in a for y in a})
        counts[size] = counts.get(size, 0) + 1
    return dict(sorted(counts.items()))
