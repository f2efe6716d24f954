"""Exact counting of relatively prime subsets of {1,...,n}, the subset
phi functions, and affine canonicalization of finite integer sets.

All arithmetic is exact; counts of size 2^n are plain Python ints.
"""

from .affine import (
    CanonicalForm,
    InvariantProfile,
    affine_map,
    affinely_equivalent,
    canonical_form,
    difference_set,
    integer_set,
    invariant_profile,
    linear_form_image,
    sumset,
    sumset_size_distribution,
)
from .arith import (
    MobiusTable,
    binomial,
    divisors,
    euler_phi,
    gcd_set,
    mobius_sieve,
    pow2_minus_1,
    shared_mobius,
)
from .counting import (
    CountReport,
    construction_lower_bound,
    count_relprime,
    count_relprime_k,
    sandwich_bounds,
    sandwich_bounds_k,
    verify_recursion,
    verify_recursion_k,
)
from .oracle import (
    ORACLE_MAX,
    enumerate_count_by_gcd,
    enumerate_relprime,
    enumerate_relprime_k,
    enumerate_subset_phi,
    enumerate_subset_phi_k,
    enumerate_subset_psi,
)
from .setphi import (
    PhiReport,
    asymptotic_report,
    asymptotic_report_k,
    residual_bound,
    residual_bound_k,
    subset_phi,
    subset_phi_k,
    subset_psi,
    verify_divisor_sum,
    verify_divisor_sum_k,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalForm",
    "CountReport",
    "InvariantProfile",
    "MobiusTable",
    "ORACLE_MAX",
    "PhiReport",
    "affine_map",
    "affinely_equivalent",
    "asymptotic_report",
    "asymptotic_report_k",
    "binomial",
    "canonical_form",
    "construction_lower_bound",
    "count_relprime",
    "count_relprime_k",
    "difference_set",
    "divisors",
    "enumerate_count_by_gcd",
    "enumerate_relprime",
    "enumerate_relprime_k",
    "enumerate_subset_phi",
    "enumerate_subset_phi_k",
    "enumerate_subset_psi",
    "euler_phi",
    "gcd_set",
    "integer_set",
    "invariant_profile",
    "linear_form_image",
    "mobius_sieve",
    "pow2_minus_1",
    "residual_bound",
    "residual_bound_k",
    "sandwich_bounds",
    "sandwich_bounds_k",
    "shared_mobius",
    "subset_phi",
    "subset_phi_k",
    "subset_psi",
    "sumset",
    "sumset_size_distribution",
    "verify_divisor_sum",
    "verify_divisor_sum_k",
    "verify_recursion",
    "verify_recursion_k",
]
