"""Machine checks for the continued-fraction identities behind the invariants.

Each verify_* function checks one identity for a single odd coprime pair
(p, q) with p > q >= 3 and returns the list of failures (empty = pass).
run_suite sweeps a named check over every such pair up to a bound and
aggregates the outcome.  All comparisons are exact: rationals are compared
as reduced integer fractions, and brackets whose value may be a ratio of two
negative integers (or have a zero denominator) are compared by
cross-multiplying the raw matrix entries.

A reported failure is either a genuine counterexample to an identity or an
implementation bug; the detail string carries the CF terms, the convergents
involved, and both sides' values so the two can be told apart by hand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from tkc.bredon_wood import n_genus, sigma, step_reduce_count
from tkc.continued_fraction import (
    BracketExpr,
    canonicalize,
    convergents,
    evaluate_raw,
    expand,
)
from tkc.torus_knot import TYPE_A, TorusKnot, classify, genus_sum_decomposition, split

SUITES = ("recipro", "criterion", "final", "sum", "claim", "delta3", "oracle", "all")
DEFAULT_K_MIN = -6
DEFAULT_K_MAX = 7


@dataclass(frozen=True)
class CheckFailure:
    suite: str
    params: tuple
    expected: str
    actual: str
    detail: str = ""

    def __str__(self) -> str:
        msg = f"[{self.suite}] {self.params}: expected {self.expected}, got {self.actual}"
        return f"{msg} ({self.detail})" if self.detail else msg


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    max_p: int
    cases: int
    failures: tuple[CheckFailure, ...]
    skipped: int = 0
    parts: tuple["VerificationReport", ...] = field(default=())

    @property
    def passed(self) -> bool:
        return not self.failures


def _table(p: int, q: int):
    """CF of q/p, its terms, n, and the penultimate convergent (num, den)."""
    cf = expand(q, p)
    table = convergents(cf)
    n = len(cf.terms) - 1
    num, den = table.pair(n - 1)
    return cf, cf.terms, n, num, den


def _cross_equal(raw: tuple[int, int], target: tuple[int, int]) -> bool:
    # projective equality; neither side can be (0, 0)
    return raw[0] * target[1] == target[0] * raw[1]


def verify_recipro(p: int, q: int) -> list[CheckFailure]:
    """Palindromic bracket expansions of (pq-1)/p^2 and (pq+1)/p^2.

    With q/p = [a_0, ..., a_n], the bracket
    [a_0, ..., a_{n-1}, a_n+1, a_n-1, a_{n-1}, ..., a_1] equals
    (pq-1)/p^2 for odd n and (pq+1)/p^2 for even n, and swapping the two
    middle terms swaps the targets.  Also checks that canonicalization of
    the brackets (which may end in a_1 = 1) reproduces the canonical CFs.
    """
    cf, a, n, _, _ = _table(p, q)
    back = tuple(reversed(a[1:n]))
    plus_minus = BracketExpr(a[:n] + (a[n] + 1, a[n] - 1) + back)
    minus_plus = BracketExpr(a[:n] + (a[n] - 1, a[n] + 1) + back)
    if n % 2 == 1:
        cases = ((plus_minus, p * q - 1), (minus_plus, p * q + 1))
    else:
        cases = ((minus_plus, p * q - 1), (plus_minus, p * q + 1))
    failures = []
    for bracket, x in cases:
        raw = evaluate_raw(bracket)
        if not _cross_equal(raw, (x, p * p)):
            failures.append(CheckFailure(
                "recipro", (p, q), f"{x}/{p * p}", f"{raw[0]}/{raw[1]}",
                f"q/p={cf} bracket={bracket}",
            ))
            continue
        canonical = canonicalize(bracket)
        direct = expand(x, p * p)
        if canonical != direct:
            failures.append(CheckFailure(
                "recipro", (p, q), str(direct), str(canonical),
                f"canonical form of bracket={bracket}",
            ))
    return failures


def verify_criterion(p: int, q: int) -> list[CheckFailure]:
    """Type A/B matches the parity of the penultimate convergent denominator.

    n even: type A iff den_{n-1} even; n odd: type A iff den_{n-1} odd.
    """
    cf, _, n, _, den = _table(p, q)
    cls = classify(TorusKnot(p, q))
    is_a = cls.kind == TYPE_A
    should_be_a = (den % 2 == 0) if n % 2 == 0 else (den % 2 == 1)
    if is_a != should_be_a:
        return [CheckFailure(
            "criterion", (p, q),
            f"type {'A' if should_be_a else 'B'} (n={n}, den_{{n-1}}={den})",
            f"type {cls.kind} (witness {cls.witness})",
            f"q/p={cf}",
        )]
    return []


def verify_final(p: int, q: int) -> list[CheckFailure]:
    """N(pq-1, p^2) and N(pq+1, p^2) differ by exactly 1, smaller per type."""
    cls = classify(TorusKnot(p, q))
    lo = n_genus(p * q - 1, p * p)
    hi = n_genus(p * q + 1, p * p)
    ok = (lo + 1 == hi) if cls.kind == TYPE_A else (hi + 1 == lo)
    if not ok:
        return [CheckFailure(
            "final", (p, q),
            f"difference 1 favouring type {cls.kind}",
            f"N({p * q - 1},{p * p})={lo}, N({p * q + 1},{p * p})={hi}",
        )]
    return []


def verify_sum(p: int, q: int) -> list[CheckFailure]:
    """The split-knot genus decomposition sums to N(pq-/+1, p^2) per type."""
    k = TorusKnot(p, q)
    cls = classify(k)
    left, right = genus_sum_decomposition(k)
    x = p * q - 1 if cls.kind == TYPE_A else p * q + 1
    total = n_genus(x, p * p)
    if left + right != total:
        pair = split(k)
        return [CheckFailure(
            "sum", (p, q),
            f"N({x},{p * p})={total}",
            f"{left}+{right}={left + right}",
            f"split knot_a={pair.knot_a} knot_b={pair.knot_b} type {cls.kind}",
        )]
    return []


def verify_claim(p: int, q: int) -> list[CheckFailure]:
    """[a_1, ..., a_{n-1}, a_n - 1] = (p - den_{n-1}) / (q - num_{n-1})."""
    cf, a, n, num, den = _table(p, q)
    bracket = BracketExpr(a[1:n] + (a[n] - 1,))
    raw = evaluate_raw(bracket)
    target = (p - den, q - num)
    if not _cross_equal(raw, target):
        return [CheckFailure(
            "claim", (p, q),
            f"{target[0]}/{target[1]}",
            f"{raw[0]}/{raw[1]}",
            f"q/p={cf} bracket={bracket}",
        )]
    return []


def _n_or_none(x: int, y: int) -> int | None:
    """N on a possibly double-negative pair; None when outside N's domain."""
    if x < 0 and y < 0:
        x, y = -x, -y
    if x < 2 or y < 1 or x % 2 != 0:
        return None
    return n_genus(x, y)


def verify_delta3(p: int, q: int, k_min: int = DEFAULT_K_MIN,
                  k_max: int = DEFAULT_K_MAX) -> tuple[list[CheckFailure], int]:
    """Bracket expansions of the two distance-3 companion fractions.

    For every admissible k in [k_min, k_max] (k even when n is odd, odd
    when n is even) the displayed bracket must match

        (+-3 den_{n-1} + p(3k-1)) / (+-3 num_{n-1} + q(3k-1))

    and its companion, compared by cross-multiplication since both entries
    go negative together for small k.  For odd n the matching genus-value
    identities are also checked whenever both sides have an even first
    argument; inapplicable instances are counted as skipped, not failed.
    """
    cf, a, n, num, den = _table(p, q)
    mid = a[1:n]
    an = a[n]
    failures: list[CheckFailure] = []
    skipped = 0
    # admissible parity: k even when n is odd, k odd when n is even
    start = k_min if k_min % 2 == (n + 1) % 2 else k_min + 1
    for k in range(start, k_max + 1, 2):
        if n % 2 == 1:
            first = (3 * den + p * (3 * k - 1), 3 * num + q * (3 * k - 1))
            second = (-3 * num + q * (2 - 3 * k), -3 * den + p * (2 - 3 * k))
            if k <= -2:
                b1 = mid + (an - 1, 1, abs(k) - 1, 3)
                b2 = (0,) + mid + (an - 1, 1, abs(k) - 1, 1, 2)
            elif k == 0:
                b1 = mid + (an - 3,)
                b2 = (0,) + mid + (an - 2, 2)
            else:
                b1 = mid + (an, k - 1, 1, 2)
                b2 = (0,) + mid + (an, k - 1, 3)
        else:
            first = (-3 * den + p * (3 * k - 1), -3 * num + q * (3 * k - 1))
            second = (3 * num + q * (2 - 3 * k), 3 * den + p * (2 - 3 * k))
            if k <= -1:
                b1 = mid + (an, abs(k), 3)
                b2 = (0,) + mid + (an, abs(k), 1, 2)
            elif k == 1:
                b1 = mid + (an - 2, 2)
                b2 = (0,) + mid + (an - 3,)
            else:
                b1 = mid + (an - 1, 1, k - 2, 1, 2)
                b2 = (0,) + mid + (an - 1, 1, k - 2, 3)
        for bracket_terms, target, side in ((b1, first, "first"), (b2, second, "second")):
            bracket = BracketExpr(bracket_terms)
            raw = evaluate_raw(bracket)
            if not _cross_equal(raw, target):
                failures.append(CheckFailure(
                    "delta3", (p, q, k),
                    f"{target[0]}/{target[1]}",
                    f"{raw[0]}/{raw[1]}",
                    f"{side} fraction, q/p={cf} bracket={bracket}",
                ))
        if n % 2 == 1:
            # genus-value identities, displayed for odd n only
            offset = abs(k) // 2 + 1
            for target, base, bump, side in (
                (first, (p - den, q - num), -1 if k == 0 else offset, "first"),
                (second, (num, den), 1 if k == 0 else offset, "second"),
            ):
                lhs = _n_or_none(*target)
                rhs = _n_or_none(*base)
                if lhs is None or rhs is None:
                    skipped += 1
                    continue
                if lhs != rhs + bump:
                    failures.append(CheckFailure(
                        "delta3", (p, q, k),
                        f"N{base}+{bump}={rhs + bump}",
                        f"N{target}={lhs}",
                        f"{side} genus identity, q/p={cf}",
                    ))
    return failures, skipped


def _odd_pairs(max_p: int):
    for p in range(5, max_p + 1, 2):
        for q in range(3, p, 2):
            if math.gcd(p, q) == 1:
                yield p, q


def _run_lemma_suite(name: str, max_p: int, k_min: int, k_max: int) -> VerificationReport:
    simple = {
        "recipro": verify_recipro,
        "criterion": verify_criterion,
        "final": verify_final,
        "sum": verify_sum,
        "claim": verify_claim,
    }
    cases = 0
    skipped = 0
    failures: list[CheckFailure] = []
    for p, q in _odd_pairs(max_p):
        cases += 1
        if name == "delta3":
            fails, skip = verify_delta3(p, q, k_min, k_max)
            failures.extend(fails)
            skipped += skip
        else:
            failures.extend(simple[name](p, q))
    return VerificationReport(name, max_p, cases, tuple(failures), skipped)


def _run_oracle_suite(max_p: int) -> VerificationReport:
    """2 * step_reduce_count = sigma, and sigma even, over even numerators."""
    cases = 0
    failures: list[CheckFailure] = []
    for x in range(2, max_p + 1, 2):
        for y in range(1, max_p + 1, 2):
            if math.gcd(x, y) != 1:
                continue
            cases += 1
            cf = expand(x, y)
            s = sigma(x, y)
            steps = step_reduce_count(cf)
            if s % 2 != 0:
                failures.append(CheckFailure(
                    "oracle", (x, y), "even sigma", str(s), f"x/y={cf}"))
            if 2 * steps != s:
                failures.append(CheckFailure(
                    "oracle", (x, y), f"sigma={s}", f"2*steps={2 * steps}", f"x/y={cf}"))
    return VerificationReport("oracle", max_p, cases, tuple(failures))


def run_suite(name: str, max_p: int, k_min: int = DEFAULT_K_MIN,
              k_max: int = DEFAULT_K_MAX) -> VerificationReport:
    """Run a named suite over all valid pairs with p <= max_p."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if max_p < 2:
        raise ValueError(f"max_p must be >= 2, got {max_p}")
    if name == "oracle":
        return _run_oracle_suite(max_p)
    if name != "all":
        return _run_lemma_suite(name, max_p, k_min, k_max)
    parts = tuple(run_suite(sub, max_p, k_min, k_max) for sub in SUITES[:-1])
    return VerificationReport(
        "all", max_p,
        cases=sum(part.cases for part in parts),
        failures=tuple(f for part in parts for f in part.failures),
        skipped=sum(part.skipped for part in parts),
        parts=parts,
    )
