"""Command-line front end: compute, verify, affine tooling, benchmark.

Exit codes follow one contract everywhere: 0 success, 1 verification
failure (an identity or cross-check that should hold did not), 2 usage
error (bad arguments or violated preconditions).  Malformed input never
produces a traceback.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from . import affine, counting, oracle, setphi
from .arith import divisors

ENV_ORACLE_MAX = "RELPRIME_ORACLE_MAX"
VERIFY_MAX_N = 10_000


class UsageError(Exception):
    """Bad command-line input; maps to exit code 2."""


@dataclass(frozen=True)
class OutputRecord:
    """One emitted result; value is an exact decimal string."""

    n: int
    value: str
    method: str
    elapsed_ms: float
    k: int | None = None
    d: int | None = None

    def to_json(self) -> str:
        fields: dict = {"n": self.n}
        if self.k is not None:
            fields["k"] = self.k
        if self.d is not None:
            fields["d"] = self.d
        fields.update(value=self.value, method=self.method, elapsed_ms=self.elapsed_ms)
        return json.dumps(fields)


def _parse_positive(text: str, what: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {text!r}") from None
    if value < 1:
        raise UsageError(f"{what} must be >= 1, got {value}")
    return value


def _parse_range(text: str) -> list[int]:
    """A single n or an inclusive range 'a..b'."""
    if ".." in text:
        first, _, last = text.partition("..")
        lo = _parse_positive(first, "range start")
        hi = _parse_positive(last, "range end")
        if lo > hi:
            raise UsageError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [_parse_positive(text, "n")]


def _parse_n_list(text: str) -> list[int]:
    """Comma-separated n values, each a single value or an a..b range."""
    out: list[int] = []
    for part in text.split(","):
        out.extend(_parse_range(part))
    return out


def _parse_set(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise UsageError(f"malformed integer set {text!r}") from None


def _format_set(elems) -> str:
    return "{" + ",".join(str(e) for e in elems) + "}"


def _effective_oracle_max() -> int:
    """Hard ceiling ORACLE_MAX, lowered (never raised) by the environment."""
    raw = os.environ.get(ENV_ORACLE_MAX)
    if raw is None:
        return oracle.ORACLE_MAX
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{ENV_ORACLE_MAX} must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError(f"{ENV_ORACLE_MAX} must be >= 1, got {value}")
    return min(value, oracle.ORACLE_MAX)


def _sampled_ks(n: int, k_max: int | None) -> list[int]:
    ks = {1, 2, 3, 5, 8, n // 2, n}
    top = n if k_max is None else min(n, k_max)
    return sorted(k for k in ks if 1 <= k <= top)


# ---------------------------------------------------------------- compute

_COMPUTE_ARITY = {
    "f": (False, False),
    "fk": (True, False),
    "phi": (False, False),
    "phik": (True, False),
    "psi": (False, True),
}


def _cmd_compute(args: argparse.Namespace) -> int:
    needs_k, needs_d = _COMPUTE_ARITY[args.function]
    if needs_k and args.k is None:
        raise UsageError(f"function {args.function} requires --k")
    if not needs_k and args.k is not None:
        raise UsageError(f"function {args.function} does not take --k")
    if needs_d and args.d is None:
        raise UsageError(f"function {args.function} requires --d")
    if not needs_d and args.d is not None:
        raise UsageError(f"function {args.function} does not take --d")

    records = []
    for n in _parse_n_list(args.n):
        start = time.perf_counter()
        if args.function == "f":
            value = counting.count_relprime(n)
        elif args.function == "fk":
            value = counting.count_relprime_k(n, args.k)
        elif args.function == "phi":
            value = setphi.subset_phi(n)
        elif args.function == "phik":
            value = setphi.subset_phi_k(n, args.k)
        else:
            value = setphi.subset_psi(n, args.d)
        elapsed = time.perf_counter() - start
        report = counting.CountReport(
            n=n, count=value, method="formula", elapsed=elapsed, k=args.k, d=args.d
        )
        records.append(
            OutputRecord(
                n=report.n,
                value=str(report.count),
                method=report.method,
                elapsed_ms=report.elapsed * 1000.0,
                k=report.k,
                d=report.d,
            )
        )

    if args.format == "plain":
        print(" ".join(rec.value for rec in records))
    elif args.format == "json":
        for rec in records:
            print(rec.to_json())
    else:  # bfile
        for rec in records:
            print(f"{rec.n} {rec.value}")
    return 0


# ----------------------------------------------------------------- verify

def _suite_recursions(n_max: int, k_max: int | None):
    # One check per n, covering the unrestricted recursion and the
    # sampled cardinality-restricted ones at that n.
    checks = 0
    for n in range(1, n_max + 1):
        if not counting.verify_recursion(n):
            return checks, f"count recursion failed at n={n}"
        for k in _sampled_ks(n, k_max):
            if not counting.verify_recursion_k(n, k):
                return checks, f"count recursion failed at n={n}, k={k}"
        checks += 1
    return checks, None


def _suite_divisor_sums(n_max: int, k_max: int | None):
    checks = 0
    for n in range(1, n_max + 1):
        if not setphi.verify_divisor_sum(n):
            return checks, f"divisor sum failed at n={n}"
        for k in _sampled_ks(n, k_max):
            if not setphi.verify_divisor_sum_k(n, k):
                return checks, f"divisor sum failed at n={n}, k={k}"
        checks += 1
    return checks, None


def _suite_bounds(n_max: int, k_max: int | None):
    # The unrestricted sandwich is checked from n = 2 on; see the
    # bounds discussion in the README.
    checks = 0
    for n in range(1, n_max + 1):
        if n >= 2:
            lo, hi = counting.sandwich_bounds(n)
            if not lo <= counting.count_relprime(n) <= hi:
                return checks, f"sandwich violated at n={n}"
        for k in _sampled_ks(n, k_max):
            lo, hi = counting.sandwich_bounds_k(n, k)
            if not lo <= counting.count_relprime_k(n, k) <= hi:
                return checks, f"sandwich violated at n={n}, k={k}"
        checks += 1
    return checks, None


def _suite_asymptotics(n_max: int, k_max: int | None):
    checks = 0
    for n in range(2, n_max + 1):
        report = setphi.asymptotic_report(n)
        if abs(report.residual) > setphi.residual_bound(n):
            return checks, f"residual envelope violated at n={n}"
        for k in _sampled_ks(n, k_max):
            report = setphi.asymptotic_report_k(n, k)
            if abs(report.residual) > setphi.residual_bound_k(n, k):
                return checks, f"residual envelope violated at n={n}, k={k}"
        checks += 1
    return checks, None


def _suite_oracle(n_max: int, k_max: int | None):
    checks = 0
    for n in range(1, n_max + 1):
        if counting.count_relprime(n) != oracle.enumerate_relprime(n):
            return checks, f"count formula disagrees with enumeration at n={n}"
        if setphi.subset_phi(n) != oracle.enumerate_subset_phi(n):
            return checks, f"subset phi disagrees with enumeration at n={n}"
        top = n if k_max is None else min(n, k_max)
        for k in range(1, top + 1):
            if counting.count_relprime_k(n, k) != oracle.enumerate_relprime_k(n, k):
                return checks, f"count formula disagrees at n={n}, k={k}"
            if setphi.subset_phi_k(n, k) != oracle.enumerate_subset_phi_k(n, k):
                return checks, f"subset phi disagrees at n={n}, k={k}"
        for d in divisors(n):
            if setphi.subset_psi(n, d) != oracle.enumerate_subset_psi(n, d):
                return checks, f"subset psi disagrees at n={n}, d={d}"
        checks += 1
    return checks, None


def _suite_affine(trials: int, _k_max):
    rng = random.Random(20070103)
    checks = 0
    for _ in range(trials):
        size = rng.randint(1, 8)
        base = set()
        while len(base) < size:
            base.add(rng.randint(-30, 30))
        q = rng.randint(1, 6)
        p = rng.choice([v for v in range(-6, 7) if v != 0])
        anchor = rng.randint(-10, 10)
        w = rng.randint(-10, 10)
        # a is constant mod q by construction, so x = p/q acts integrally
        # with the matching translation.
        a = [q * r + anchor for r in base]
        x = Fraction(p, q)
        y = Fraction(w * q - p * anchor, q)
        b = affine.affine_map(a, x, y)
        if affine.canonical_form(a).representative != affine.canonical_form(b).representative:
            return checks, f"representative not preserved for {sorted(a)}"
        if affine.invariant_profile(a) != affine.invariant_profile(b):
            return checks, f"invariant profile not preserved for {sorted(a)}"
        form = affine.canonical_form(a)
        if affine.canonical_form(form.base).base != form.base:
            return checks, f"canonicalization not idempotent for {sorted(a)}"
        checks += 1
    return checks, None


_PHI_PRIMES = (2, 3, 5, 7, 11, 13)
_PHI_SQUARE_PRIMES = (2, 3, 5)
_PHI_PRIME_PAIRS = ((2, 3), (2, 5), (3, 5), (2, 7))


def _suite_closed_forms(_n_max, _k_max):
    checks = 0
    for p in _PHI_PRIMES:
        if setphi.subset_phi(p) != (1 << p) - 2:
            return checks, f"prime closed form failed at p={p}"
        checks += 1
    for p in _PHI_SQUARE_PRIMES:
        if setphi.subset_phi(p * p) != (1 << (p * p)) - (1 << p):
            return checks, f"prime-square closed form failed at p={p}"
        checks += 1
    for p, q in _PHI_PRIME_PAIRS:
        expected = (1 << (p * q)) - (1 << q) - (1 << p) + 2
        if setphi.subset_phi(p * q) != expected:
            return checks, f"semiprime closed form failed at pq={p * q}"
        checks += 1
    return checks, None


_SUITES = {
    "recursions": (_suite_recursions, VERIFY_MAX_N),
    "divisor-sums": (_suite_divisor_sums, VERIFY_MAX_N),
    "bounds": (_suite_bounds, VERIFY_MAX_N),
    "asymptotics": (_suite_asymptotics, VERIFY_MAX_N),
    "oracle": (_suite_oracle, None),  # guard resolved at run time
    "affine": (_suite_affine, VERIFY_MAX_N),
    "closed-forms": (_suite_closed_forms, VERIFY_MAX_N),
}


def _cmd_verify(args: argparse.Namespace) -> int:
    suite_fn, guard = _SUITES[args.suite]
    n_max = args.n_max
    if guard is None:
        guard = _effective_oracle_max()
    if not 1 <= n_max <= guard:
        raise UsageError(f"suite {args.suite} requires 1 <= n-max <= {guard}, got {n_max}")
    checks, failure = suite_fn(n_max, args.k_max)
    if failure is not None:
        print(f"{args.suite}: FAIL after {checks} passing checks: {failure}")
        return 1
    print(f"{args.suite}: {checks} checks passed")
    return 0


# ----------------------------------------------------------------- affine

def _cmd_affine(args: argparse.Namespace) -> int:
    action = args.action
    sets = [_parse_set(text) for text in args.set or []]
    if action in ("canon", "profile") and len(sets) != 1:
        raise UsageError(f"affine {action} requires exactly one --set")
    if action == "equiv" and len(sets) != 2:
        raise UsageError("affine equiv requires exactly two --set arguments")
    if action == "dist":
        if sets:
            raise UsageError("affine dist takes --n/--k flags, not --set")
        if args.n is None:
            raise UsageError("affine dist requires --n")

    if action == "canon":
        form = affine.canonical_form(sets[0])
        print(
            f"C={_format_set(form.base)} D={_format_set(form.mirror)} "
            f"representative={_format_set(form.representative)}"
        )
    elif action == "equiv":
        verdict = affine.affinely_equivalent(sets[0], sets[1])
        print("true" if verdict else "false")
    elif action == "profile":
        profile = affine.invariant_profile(sets[0])
        print(f"s={profile.sumset_size} d={profile.difference_size}")
    else:
        dist = affine.sumset_size_distribution(
            args.n, k=args.k, inequivalent_only=args.inequivalent
        )
        print(" ".join(f"{size}:{count}" for size, count in dist.items()))
    return 0


# ------------------------------------------------------------------ bench

def _cmd_bench(args: argparse.Namespace) -> int:
    ns = _parse_n_list(args.n)
    reps = args.reps
    if reps < 1:
        raise UsageError("--reps must be >= 1")
    guard = _effective_oracle_max()
    for n in ns:
        if n > guard:
            raise UsageError(f"bench n={n} exceeds the enumeration guard of {guard}")
    for n in ns:
        formula_s = float("inf")
        for _ in range(reps):
            counting.count_relprime.cache_clear()
            start = time.perf_counter()
            formula_value = counting.count_relprime(n)
            formula_s = min(formula_s, time.perf_counter() - start)
        oracle_s = float("inf")
        for _ in range(reps):
            start = time.perf_counter()
            oracle_value = oracle.enumerate_relprime(n)
            oracle_s = min(oracle_s, time.perf_counter() - start)
        formula = counting.CountReport(
            n=n, count=formula_value, method="formula", elapsed=formula_s
        )
        enumerated = counting.CountReport(
            n=n, count=oracle_value, method="oracle", elapsed=oracle_s
        )
        if formula.count != enumerated.count:
            print(
                f"n={n}: MISMATCH formula={formula.count} enumeration={enumerated.count}",
                file=sys.stderr,
            )
            return 1
        speedup = enumerated.elapsed / max(formula.elapsed, 1e-9)
        print(
            f"n={n} formula_ms={formula.elapsed * 1000.0:.4f} "
            f"oracle_ms={enumerated.elapsed * 1000.0:.4f} speedup={speedup:.1f}"
        )
    return 0


# ------------------------------------------------------------------ wiring

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relprime",
        description=(
            "Exact counts of relatively prime subsets of {1..n}, the subset "
            "phi functions, and affine canonicalization of integer sets."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="evaluate a counting function")
    p_compute.add_argument(
        "function", choices=sorted(_COMPUTE_ARITY), help="counting function to evaluate"
    )
    p_compute.add_argument("--n", required=True, help="n value, range a..b, or comma list")
    p_compute.add_argument("--k", type=int, help="cardinality (fk/phik only)")
    p_compute.add_argument("--d", type=int, help="divisor of n (psi only)")
    p_compute.add_argument(
        "--format",
        choices=("plain", "json", "bfile"),
        default="plain",
        help="plain values, JSON lines, or OEIS b-file lines",
    )
    p_compute.set_defaults(handler=_cmd_compute)

    p_verify = sub.add_parser("verify", help="run an identity/cross-check suite")
    p_verify.add_argument("suite", choices=sorted(_SUITES))
    p_verify.add_argument(
        "--n-max",
        dest="n_max",
        type=int,
        default=1000,
        help="upper end of the check range (trial count for the affine suite)",
    )
    p_verify.add_argument(
        "--k-max", dest="k_max", type=int, default=None, help="cap on sampled k values"
    )
    p_verify.set_defaults(handler=_cmd_verify)

    p_affine = sub.add_parser("affine", help="canonical forms and invariants")
    p_affine.add_argument("action", choices=("canon", "dist", "equiv", "profile"))
    p_affine.add_argument(
        "--set", action="append", help="comma-separated integers; repeatable"
    )
    p_affine.add_argument("--n", type=int, help="interval end for dist")
    p_affine.add_argument("--k", type=int, help="cardinality restriction for dist")
    p_affine.add_argument(
        "--inequivalent",
        action="store_true",
        help="count each affine class once in dist",
    )
    p_affine.set_defaults(handler=_cmd_affine)

    p_bench = sub.add_parser("bench", help="time the formula against enumeration")
    p_bench.add_argument("--n", required=True, help="n value, range a..b, or comma list")
    p_bench.add_argument("--reps", type=int, default=3, help="timing repetitions")
    p_bench.set_defaults(handler=_cmd_bench)

    return parser


def _fold_set_values(argv: list[str]) -> list[str]:
    """Join '--set' with its value so sets starting with '-' parse."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        if argv[i] == "--set" and i + 1 < len(argv):
            out.append(f"--set={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_fold_set_values(list(argv)))
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
