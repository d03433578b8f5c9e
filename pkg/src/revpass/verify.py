"""
Named invariant suites, runnable from the command line via ``verify``.

Each check returns a list of failure descriptions (empty means pass); the
runner prints one PASS/FAIL line per check and reports overall success.
Expensive exhaustive checks scale with the ``--max-n`` bound (the canonical
CI run uses 9) while identity checks on recurrences and series always run
at their natural bounds.  Sweep results are cached per run so the suites
share work.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from math import comb, factorial
from typing import Callable

from . import basis as basis_mod
from . import entringer as entringer_mod
from . import parallel
from . import series as series_mod
from . import tables as tables_mod
from .pairs import (
    Orientation,
    max_tier_witness,
    orientation_profile,
    rev_tier_by_pairs,
    rev_tier_by_pairs_dp,
    witness_pair_from_pattern,
    _tier_class_position,
)
from .permutation import (
    contains_pattern,
    delete_entry,
    enumerate_sn,
    insert_min,
    inverse,
    inversion_profile,
    rank,
    reverse,
    unrank,
)
from .sorting import series_machine_sort, single_pass

__all__ = ["run_suite", "suite_names", "VerifyContext"]


# Reference data, frozen from independent computation (brute force for the
# tables, the recurrence for the triangle); the verify suites compare the
# library's two computation routes against these and each other.

EXPECTED_EXACT_TIER = {
    1: (1,),
    2: (2,),
    3: (5, 1),
    4: (14, 8, 2),
    5: (42, 47, 26, 5),
    6: (132, 248, 228, 96, 16),
    7: (429, 1249, 1702, 1178, 421, 61),
    8: (1430, 6154, 11704, 11840, 6818, 2102, 272),
    9: (4862, 30013, 76845, 106567, 88020, 43347, 11841, 1385),
    10: (16796, 145764, 490866, 896560, 997056, 697644, 302002, 74176, 7936),
}

BASIS_TIER_1 = ((2, 4, 1, 3), (2, 4, 3, 1), (2, 3, 1, 5, 4))

BASIS_TIER_2 = (
    (2, 4, 1, 5, 3),
    (2, 4, 5, 1, 3),
    (2, 4, 5, 3, 1),
    (4, 2, 5, 1, 3),
    (4, 2, 5, 3, 1),
    (2, 3, 1, 5, 6, 4),
    (2, 6, 1, 4, 5, 3),
    (5, 2, 3, 1, 6, 4),
    (5, 6, 2, 4, 1, 3),
    (5, 6, 2, 4, 3, 1),
    (6, 7, 2, 3, 1, 5, 4),
)

# Oracle-verified: every element has machine tier >= 4 and every proper
# subpermutation has tier <= 3 (checked over all subsets, not only one-entry
# deletions), and the set is an antichain under containment.
BASIS_TIER_3_HISTOGRAM = {6: 16, 7: 26, 8: 12, 9: 1}

WILF_BASIS = ((4, 3, 2, 1), (4, 2, 1, 3))

EULER_NUMBERS = (1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521)  # E_1 .. E_10


@dataclass
class VerifyContext:
    max_n: int = 9
    workers: int | None = None
    _tier_sweeps: dict = field(default_factory=dict)
    _av_sets: dict = field(default_factory=dict)
    _families: dict = field(default_factory=dict)

    def cap(self, bound: int) -> int:
        return min(bound, self.max_n)

    def refined(self, n: int):
        return tables_mod.swept_class_counts(n, self.workers)

    def tier_sweep(self, n: int) -> tuple[int, int, int]:
        """(oracle mismatches, progress violations, max tier) over S_n."""
        if n not in self._tier_sweeps:
            merged = [0, 0, 0]
            for m, p, mx in parallel.scan_sn(
                n, _oracle_chunk, workers=self.workers
            ):
                merged[0] += m
                merged[1] += p
                merged[2] = max(merged[2], mx)
            self._tier_sweeps[n] = tuple(merged)
        return self._tier_sweeps[n]

    def av_sets(self, patterns: tuple, max_n: int):
        key = (patterns, max_n)
        if key not in self._av_sets:
            self._av_sets[key] = basis_mod.av_members(
                patterns, max_n, workers=self.workers
            )
        return self._av_sets[key]

    def family(self, n: int):
        if n not in self._families:
            self._families[n] = entringer_mod.maximal_tier_family(
                n, workers=self.workers
            )
        return self._families[n]


# --- top-level chunk functions (cross process boundaries) -------------------


def _oracle_chunk(n: int, start: int, stop: int) -> tuple[int, int, int]:
    mismatches = 0
    progress_bad = 0
    max_tier = 0
    for perm in enumerate_sn(n, (start, stop)):
        remaining = perm
        next_needed = 1
        passes = 0
        while remaining:
            emitted, remaining, next_needed = single_pass(remaining, next_needed)
            passes += 1
            if not emitted:
                progress_bad += 1
                break
        tier_sim = max(passes - 1, 0)
        tier_greedy, _ = rev_tier_by_pairs(perm)
        tier_dp = rev_tier_by_pairs_dp(perm)
        if not tier_sim == tier_greedy == tier_dp:
            mismatches += 1
        if tier_greedy > max_tier:
            max_tier = tier_greedy
    return mismatches, progress_bad, max_tier


def _machine_chunk(n: int, start: int, stop: int) -> int:
    mismatches = 0
    for perm in enumerate_sn(n, (start, stop)):
        tier = _tier_class_position(perm)[0]
        for stacks in range(1, n + 1):
            sorted_ok, _ = series_machine_sort(perm, stacks, record_states=False)
            if sorted_ok != (tier <= stacks - 1):
                mismatches += 1
    return mismatches


def _reversal_chunk(n: int, start: int, stop: int) -> int:
    bad = 0
    for perm in enumerate_sn(n, (start, stop)):
        tier, cls, k = _tier_class_position(perm)
        if cls != 2:  # up-oriented class only; reversal covers the rest
            continue
        r_tier, r_cls, r_k = _tier_class_position(reverse(perm))
        if not (r_cls == 1 and r_tier == tier + 1 and r_k == n - k + 1):
            bad += 1
    return bad


def _membership_chunk(
    n: int, start: int, stop: int, members: frozenset, bound: int
) -> int:
    bad = 0
    for perm in enumerate_sn(n, (start, stop)):
        if (_tier_class_position(perm)[0] <= bound) != (perm in members):
            bad += 1
    return bad


_ORACLE_PATTERNS = [
    list(itertools.permutations(range(1, m + 1))) for m in range(5)
]


def _containment_chunk(n: int, start: int, stop: int) -> int:
    bad = 0
    top_m = min(4, n)
    for perm in enumerate_sn(n, (start, stop)):
        found: set = set()
        for m in range(1, top_m + 1):
            for positions in itertools.combinations(range(n), m):
                window = [perm[p] for p in positions]
                found.add(tuple(sum(b <= a for b in window) for a in window))
        for m in range(1, 5):
            for pattern in _ORACLE_PATTERNS[m]:
                if contains_pattern(perm, pattern) != (pattern in found):
                    bad += 1
    return bad


# --- checks ------------------------------------------------------------------


def _fail(message: str, *details) -> str:
    if details:
        return message + ": " + ", ".join(str(d) for d in details)
    return message


def check_containment_oracle(ctx: VerifyContext) -> list[str]:
    """contains_pattern agrees with an all-subsequences scan."""
    failures = []
    for n in range(1, ctx.cap(8) + 1):
        bad = sum(parallel.scan_sn(n, _containment_chunk, workers=ctx.workers))
        if bad:
            failures.append(_fail("disagreements", f"n={n}", bad))
    return failures


def check_edit_round_trip(ctx: VerifyContext) -> list[str]:
    """delete_entry(insert_min(s, i), i) = s, and reverse is an involution."""
    failures = []
    for n in range(0, ctx.cap(7) + 1):
        for perm in enumerate_sn(n):
            if reverse(reverse(perm)) != perm:
                failures.append(_fail("reverse not an involution", perm))
            for pos in range(1, n + 2):
                if delete_entry(insert_min(perm, pos), pos) != perm:
                    failures.append(_fail("round trip failed", perm, pos))
                    if len(failures) > 3:
                        return failures
    return failures


def check_enumeration(ctx: VerifyContext) -> list[str]:
    """Lexicographic order, count n!, rank/unrank, and range partition."""
    failures = []
    for n in range(0, ctx.cap(7) + 1):
        perms = list(enumerate_sn(n))
        if len(perms) != factorial(n) or len(set(perms)) != len(perms):
            failures.append(_fail("wrong enumeration size", n))
        if perms != sorted(perms):
            failures.append(_fail("not lexicographic", n))
        for r, perm in enumerate(perms):
            if rank(perm) != r or unrank(n, r) != perm:
                failures.append(_fail("rank/unrank mismatch", n, r))
                break
        pieces = []
        bounds = [0, factorial(n) // 3, factorial(n) // 2, factorial(n)]
        for a, b in zip(bounds, bounds[1:]):
            pieces.extend(enumerate_sn(n, (a, b)))
        if pieces != perms:
            failures.append(_fail("rank ranges do not partition", n))
    return failures


def check_inversion_bookkeeping(ctx: VerifyContext) -> list[str]:
    """sum inv_left = sum inv_right, invariant under group inverse."""
    failures = []
    for n in range(0, ctx.cap(7) + 1):
        for perm in enumerate_sn(n):
            profile = inversion_profile(perm)
            total_left = sum(profile.inv_left)
            total_right = sum(profile.inv_right)
            total_inverse = sum(inversion_profile(inverse(perm)).inv_left)
            if not total_left == total_right == total_inverse:
                failures.append(_fail("inversion totals differ", perm))
                if len(failures) > 3:
                    return failures
            if perm and profile.inv_left[perm.index(1)] != 0:
                failures.append(_fail("value 1 charged with inversions", perm))
    return failures


def check_tier_oracles(ctx: VerifyContext) -> list[str]:
    """Simulation, greedy scan and DP agree on every permutation."""
    failures = []
    for n in range(0, ctx.cap(9) + 1):
        mismatches, _, _ = ctx.tier_sweep(n)
        if mismatches:
            failures.append(_fail("tier mismatches", f"n={n}", mismatches))
    return failures


def check_pass_progress(ctx: VerifyContext) -> list[str]:
    """Every reverse pass over a non-empty residual emits at least one value."""
    failures = []
    for n in range(0, ctx.cap(9) + 1):
        _, progress_bad, _ = ctx.tier_sweep(n)
        if progress_bad:
            failures.append(_fail("stalled passes", f"n={n}", progress_bad))
    return failures


def check_machine_equivalence(ctx: VerifyContext) -> list[str]:
    """k stacks in series sort a permutation iff its tier is at most k-1."""
    failures = []
    for n in range(1, ctx.cap(8) + 1):
        bad = sum(
            parallel.scan_sn(n, _machine_chunk, workers=ctx.workers)
        )
        if bad:
            failures.append(_fail("machine/tier mismatches", f"n={n}", bad))
    return failures


def check_machine_conservation(ctx: VerifyContext) -> list[str]:
    """Machine states always hold exactly the original entries."""
    failures = []
    for n in range(0, ctx.cap(6) + 1):
        for perm in enumerate_sn(n):
            for stacks in (1, 2, n or 1):
                _, states = series_machine_sort(perm, stacks)
                for state in states:
                    seen = sorted(
                        list(state.input)
                        + list(state.output)
                        + [v for s in state.stacks for v in s]
                    )
                    if seen != list(range(1, n + 1)):
                        failures.append(_fail("conservation broken", perm, stacks))
                        if len(failures) > 3:
                            return failures
    return failures


def check_claesson(ctx: VerifyContext) -> list[str]:
    """Down pairs appear iff 231 occurs; up pairs iff 132 occurs."""
    failures = []
    for n in range(1, ctx.cap(8) + 1):
        for perm in enumerate_sn(n):
            profile = orientation_profile(perm)
            has_down = Orientation.DOWN in profile
            has_up = Orientation.UP in profile
            if has_down != contains_pattern(perm, (2, 3, 1)):
                failures.append(_fail("231/down mismatch", perm))
            if has_up != contains_pattern(perm, (1, 3, 2)):
                failures.append(_fail("132/up mismatch", perm))
            if len(failures) > 3:
                return failures
    return failures


def check_witness_extraction(ctx: VerifyContext) -> list[str]:
    """Every pattern occurrence yields a separated pair of the right kind."""
    failures = []
    for n in range(3, ctx.cap(6) + 1):
        for perm in enumerate_sn(n):
            for positions in itertools.combinations(range(n), 3):
                a, b, c = (perm[p] for p in positions)
                if c < a < b:  # 231 occurrence
                    i = witness_pair_from_pattern(perm, (a, b, c), 231)
                    ok = (
                        c <= i <= a - 1
                        and orientation_profile(perm)[i - 1] is Orientation.DOWN
                    )
                elif a < c < b:  # 132 occurrence
                    i = witness_pair_from_pattern(perm, (a, b, c), 132)
                    ok = (
                        a <= i <= c - 1
                        and orientation_profile(perm)[i - 1] is Orientation.UP
                    )
                else:
                    continue
                if not ok:
                    failures.append(_fail("bad witness", perm, (a, b, c)))
                    if len(failures) > 3:
                        return failures
    return failures


def check_deletion_monotone(ctx: VerifyContext) -> list[str]:
    """Deleting an entry never raises the tier."""
    failures = []
    for n in range(1, ctx.cap(8) + 1):
        for perm in enumerate_sn(n):
            tier = _tier_class_position(perm)[0]
            for pos in range(1, n + 1):
                if _tier_class_position(delete_entry(perm, pos))[0] > tier:
                    failures.append(_fail("deletion raised tier", perm, pos))
                    if len(failures) > 3:
                        return failures
    return failures


def check_max_tier(ctx: VerifyContext) -> list[str]:
    """max_tier_witness reaches n-2 and nothing exceeds it."""
    failures = []
    for n in range(2, 13):
        witness = max_tier_witness(n)
        tier, _ = rev_tier_by_pairs(witness)
        if tier != n - 2:
            failures.append(_fail("witness tier wrong", n, tier))
    for n in range(2, ctx.cap(9) + 1):
        _, _, max_tier = ctx.tier_sweep(n)
        if max_tier > n - 2:
            failures.append(_fail("tier exceeded n-2", f"n={n}", max_tier))
    return failures


def check_class_partition(ctx: VerifyContext) -> list[str]:
    """The three classes partition S_n; class sizes match the closed form."""
    failures = []
    for n in range(1, ctx.cap(9) + 1):
        swept = ctx.refined(n)
        total = sum(sum(sum(row) for row in cls) for cls in swept)
        if total != factorial(n):
            failures.append(_fail("classes do not partition", f"n={n}", total))
        flat_total = sum(sum(row) for row in swept[0])
        if flat_total != 2 ** (n - 1):
            failures.append(_fail("flat class size", f"n={n}", flat_total))
    return failures


def check_position_exclusions(ctx: VerifyContext) -> list[str]:
    """Up class never has 1 in the last two slots; down never in the first two."""
    failures = []
    for n in range(1, ctx.cap(9) + 1):
        swept = ctx.refined(n)
        tslots = len(swept[0])
        for t in range(tslots):
            for k in (n, n - 1):
                if k >= 1 and swept[2][t][k - 1]:
                    failures.append(_fail("up class anomaly", (n, t, k)))
            for k in (1, 2):
                if k <= n and swept[1][t][k - 1]:
                    failures.append(_fail("down class anomaly", (n, t, k)))
    return failures


def check_reversal_per_perm(ctx: VerifyContext) -> list[str]:
    """Reversal maps the up class at tier t to the down class at tier t+1."""
    failures = []
    for n in range(1, ctx.cap(9) + 1):
        bad = sum(parallel.scan_sn(n, _reversal_chunk, workers=ctx.workers))
        if bad:
            failures.append(_fail("reversal mismatches", f"n={n}", bad))
    return failures


def check_exact_table(ctx: VerifyContext) -> list[str]:
    """Brute-force exact-tier rows match the frozen reference rows."""
    failures = []
    top = ctx.cap(10)
    table = tables_mod.exact_tier_table(top, workers=ctx.workers)
    for n in range(1, top + 1):
        if table.rows[n - 1] != EXPECTED_EXACT_TIER[n]:
            failures.append(
                _fail("row differs", f"n={n}", table.rows[n - 1])
            )
    return failures


def check_cumulative_table(ctx: VerifyContext) -> list[str]:
    """Cumulative rows accumulate the exact rows and end at n!."""
    failures = []
    top = ctx.cap(10)
    table = tables_mod.cumulative_tier_table(top, workers=ctx.workers)
    for n in range(1, top + 1):
        expected = []
        total = 0
        for t in range(max(top - 1, 1)):
            row = EXPECTED_EXACT_TIER[n]
            total += row[t] if t < len(row) else 0
            expected.append(total)
        if list(table.rows[n - 1]) != expected:
            failures.append(_fail("row differs", f"n={n}"))
        if table.rows[n - 1][-1] != factorial(n):
            failures.append(_fail("row does not end at n!", f"n={n}"))
    return failures


def check_recurrence_vs_bruteforce(ctx: VerifyContext) -> list[str]:
    """The five insertion recurrences reproduce the swept refined counts."""
    failures = []
    top = ctx.cap(9)
    rec = tables_mod.refined_counts_recurrence(top)
    brute = tables_mod.refined_counts_bruteforce(top, workers=ctx.workers)
    for n in range(1, top + 1):
        for k in range(1, n + 1):
            if rec.eta(n, k) != brute.eta(n, k):
                failures.append(_fail("eta differs", (n, k)))
            for t in range(0, n):
                if rec.mu_u(n, t, k) != brute.mu_u(n, t, k):
                    failures.append(_fail("mu_u differs", (n, t, k)))
                if rec.mu_d(n, t, k) != brute.mu_d(n, t, k):
                    failures.append(_fail("mu_d differs", (n, t, k)))
                if len(failures) > 5:
                    return failures
    return failures


def check_reversal_count_identities(ctx: VerifyContext) -> list[str]:
    """mu_u(n,t,k) = mu_d(n,t+1,n-k+1); column sums pair up; eta symmetric."""
    failures = []
    rec = tables_mod.refined_counts_recurrence(12)
    for n in range(1, 13):
        for k in range(1, n + 1):
            if rec.eta(n, k) != rec.eta(n, n - k + 1):
                failures.append(_fail("eta asymmetry", (n, k)))
            for t in range(0, n):
                if rec.mu_u(n, t, k) != rec.mu_d(n, t + 1, n - k + 1):
                    failures.append(_fail("reversal identity", (n, t, k)))
                    if len(failures) > 5:
                        return failures
        for t in range(0, n):
            up = sum(rec.mu_u(n, t, k) for k in range(1, n + 1))
            down = sum(rec.mu_d(n, t + 1, k) for k in range(1, n + 1))
            if up != down:
                failures.append(_fail("column sums differ", (n, t)))
    return failures


def check_suffix_sum_identity(ctx: VerifyContext) -> list[str]:
    """mu_u(n, t, n-2) equals the sum of mu_d(m, t, m) over m < n."""
    failures = []
    rec = tables_mod.refined_counts_recurrence(12)
    for n in range(3, 13):
        for t in range(1, n - 1):
            lhs = rec.mu_u(n, t, n - 2)
            rhs = sum(rec.mu_d(m, t, m) for m in range(1, n))
            if lhs != rhs:
                failures.append(_fail("suffix identity", (n, t), lhs, rhs))
    return failures


def check_eta_closed_form(ctx: VerifyContext) -> list[str]:
    """eta(n,k) = binomial(n-1,k-1) against the recurrence, rows sum 2^(n-1)."""
    failures = []
    rec = tables_mod.refined_counts_recurrence(12)
    for n in range(1, 13):
        for k in range(1, n + 1):
            if rec.eta(n, k) != tables_mod.eta_closed_form(n, k):
                failures.append(_fail("eta differs", (n, k)))
        if sum(rec.eta(n, k) for k in range(1, n + 1)) != 2 ** (n - 1):
            failures.append(_fail("eta row sum", n))
    return failures


def check_class_decomposition(ctx: VerifyContext) -> list[str]:
    """f(n,t,k) totals rebuild the exact-tier counts."""
    failures = []
    top = ctx.cap(9)
    brute = tables_mod.refined_counts_bruteforce(top, workers=ctx.workers)
    exact = tables_mod.exact_tier_table(top, workers=ctx.workers)
    for n in range(1, top + 1):
        for t in range(0, max(n - 1, 1)):
            if brute.tier_total(n, t) != exact.entry(n, t):
                failures.append(_fail("decomposition differs", (n, t)))
    return failures


def _basis_matches(ctx, t, max_len, expected) -> list[str]:
    report = basis_mod.compute_basis(t, max_len, workers=ctx.workers)
    if report.elements != tuple(expected):
        return [_fail("basis differs", f"t={t}", report.elements)]
    if not report.complete:
        return [_fail("report not marked complete", f"t={t}")]
    return []


def check_basis_tier0(ctx: VerifyContext) -> list[str]:
    return _basis_matches(ctx, 0, 3, ((2, 3, 1),))


def check_basis_tier1(ctx: VerifyContext) -> list[str]:
    return _basis_matches(ctx, 1, 6, BASIS_TIER_1)


def check_basis_tier2(ctx: VerifyContext) -> list[str]:
    return _basis_matches(ctx, 2, 9, BASIS_TIER_2)


def check_basis_tier3(ctx: VerifyContext) -> list[str]:
    if ctx.max_n < 9:
        return []  # frontier to length 9 is the interesting case
    report = basis_mod.compute_basis(3, 9, workers=ctx.workers)
    failures = []
    if report.length_histogram() != BASIS_TIER_3_HISTOGRAM:
        failures.append(_fail("histogram differs", report.length_histogram()))
    if report.complete:
        failures.append("report claims completeness below the length bound")
    return failures


def check_strategies_agree(ctx: VerifyContext) -> list[str]:
    failures = []
    max_len = ctx.cap(7)
    for t in (0, 1, 2):
        exhaustive = basis_mod.compute_basis(
            t, max_len, strategy="exhaustive", workers=ctx.workers
        )
        extension = basis_mod.compute_basis(
            t, max_len, strategy="extension", workers=ctx.workers
        )
        if exhaustive != extension:
            failures.append(_fail("strategies disagree", f"t={t}"))
    return failures


def _avoidance_matches_tier(ctx, patterns, bound) -> list[str]:
    failures = []
    top = ctx.cap(9)
    sets = ctx.av_sets(tuple(patterns), top)
    for n in range(1, top + 1):
        members = frozenset(sets[n - 1])
        bad = sum(
            parallel.scan_sn(
                n,
                _membership_chunk,
                extra_args=(members, bound),
                workers=ctx.workers,
            )
        )
        if bad:
            failures.append(_fail("membership mismatches", f"n={n}", bad))
    return failures


def check_avoidance_tier1(ctx: VerifyContext) -> list[str]:
    """Avoiding the three tier<=1 basis patterns is exactly tier <= 1."""
    return _avoidance_matches_tier(ctx, BASIS_TIER_1, 1)


def check_avoidance_tier2(ctx: VerifyContext) -> list[str]:
    """Avoiding the eleven tier<=2 basis patterns is exactly tier <= 2."""
    return _avoidance_matches_tier(ctx, BASIS_TIER_2, 2)


def _cumulative_tier1(table: tables_mod.TierCountTable, n: int) -> int:
    # For max_n <= 2 the table has no t<=1 column, but the t<=0 value agrees.
    return table.entry(n, 1 if table.max_n >= 3 else 0)


def check_wilf_pair(ctx: VerifyContext) -> list[str]:
    """Av(4321,4213), the tier<=1 class, and the cumulative column agree."""
    failures = []
    top = ctx.cap(10)
    wilf_counts = basis_mod.enumerate_av(WILF_BASIS, top, workers=ctx.workers)
    class_counts = basis_mod.enumerate_av(BASIS_TIER_1, top, workers=ctx.workers)
    cumulative = tables_mod.cumulative_tier_table(top, workers=ctx.workers)
    for n in range(1, top + 1):
        expected = _cumulative_tier1(cumulative, n)
        if not wilf_counts[n - 1] == class_counts[n - 1] == expected:
            failures.append(
                _fail(
                    "counts differ",
                    f"n={n}",
                    wilf_counts[n - 1],
                    class_counts[n - 1],
                    expected,
                )
            )
    return failures


def check_basis_minimality(ctx: VerifyContext) -> list[str]:
    """Every reported basis element passes the minimality test."""
    failures = []
    for t, max_len in ((0, 3), (1, 6), (2, 9)):
        report = basis_mod.compute_basis(t, max_len, workers=ctx.workers)
        for perm in report.elements:
            if not basis_mod.is_basis_element(perm, t):
                failures.append(_fail("non-minimal element", f"t={t}", perm))
    return failures


def check_entringer_triangle(ctx: VerifyContext) -> list[str]:
    """Triangle boundary rows, the recurrence, and Euler row sums."""
    failures = []
    table = entringer_mod.entringer_table(12)
    if table.rows[4] != (0, 2, 4, 5, 5):
        failures.append(_fail("row 5 differs", table.rows[4]))
    if table.entry(1, 1) != 1:
        failures.append("E(1,1) is not 1")
    for n in range(2, 13):
        if table.entry(n, 1) != 0:
            failures.append(_fail("E(n,1) nonzero", n))
        for k in range(2, n + 1):
            if table.entry(n, k) != table.entry(n, k - 1) + table.entry(
                n - 1, n + 1 - k
            ):
                failures.append(_fail("recurrence broken", (n, k)))
    for n in range(1, 11):
        if table.row_sums[n - 1] != EULER_NUMBERS[n - 1]:
            failures.append(_fail("row sum differs", n))
    return failures


def check_alternating_enumeration(ctx: VerifyContext) -> list[str]:
    """Down/up alternating permutations are counted by the triangle."""
    failures = []
    top = ctx.cap(9)
    table = entringer_mod.entringer_table(max(top, 1))
    for n in range(1, top + 1):
        perms = entringer_mod.enumerate_alternating(n)
        if any(not entringer_mod.is_alternating_downup(p) for p in perms):
            failures.append(_fail("non-alternating output", n))
        if len(perms) != table.row_sums[n - 1]:
            failures.append(_fail("row count differs", n, len(perms)))
        for k in range(1, n + 1):
            by_k = entringer_mod.enumerate_alternating(n, k)
            if len(by_k) != table.entry(n, k):
                failures.append(_fail("cell count differs", (n, k)))
        brute = [
            p
            for p in enumerate_sn(n)
            if entringer_mod.is_alternating_downup(p)
        ] if n <= 8 else None
        if brute is not None and sorted(perms) != brute:
            failures.append(_fail("enumeration differs from filter", n))
    return failures


def check_family_counts(ctx: VerifyContext) -> list[str]:
    """Maximal-tier family sizes equal the shifted triangle entries."""
    failures = []
    top = ctx.cap(10)
    table = entringer_mod.entringer_table(max(top, 2))
    for n in range(3, top + 1):
        family = ctx.family(n)
        for k in (0, 1, n):
            if family.count(k):
                failures.append(_fail("impossible slot occupied", (n, k)))
        for k in range(1, n):
            if family.count(k) != table.entry(n - 1, k):
                failures.append(_fail("cell differs", (n, k)))
        if family.total != table.row_sums[n - 2]:
            failures.append(_fail("total differs", n))
    return failures


def check_bijection_round_trip(ctx: VerifyContext) -> list[str]:
    """f then f-inverse is the identity; images land in the right cell."""
    failures = []
    top = ctx.cap(9)
    for m in range(1, top + 1):
        for pi in entringer_mod.enumerate_alternating(m):
            sigma = entringer_mod.bijection_f(pi)
            tier, _ = rev_tier_by_pairs(sigma)
            if tier != m - 1:
                failures.append(_fail("image tier wrong", pi))
            if sigma.index(1) != pi[0]:  # 1 in position pi[0]+1 (1-based)
                failures.append(_fail("image position wrong", pi))
            if entringer_mod.bijection_f_inverse(sigma) != pi:
                failures.append(_fail("round trip failed", pi))
                if len(failures) > 3:
                    return failures
    for n in range(3, ctx.cap(9) + 1):
        family = ctx.family(n)
        for members in family.members_by_k.values():
            for sigma in members:
                if entringer_mod.bijection_f(
                    entringer_mod.bijection_f_inverse(sigma)
                ) != sigma:
                    failures.append(_fail("inverse round trip failed", sigma))
                    if len(failures) > 3:
                        return failures
    return failures


def check_table_diagonal(ctx: VerifyContext) -> list[str]:
    """Exact-tier diagonal (n, n-2) runs through the Euler numbers."""
    failures = []
    top = ctx.cap(10)
    exact = tables_mod.exact_tier_table(top, workers=ctx.workers)
    for n in range(3, top + 1):
        if exact.entry(n, n - 2) != EULER_NUMBERS[n - 2]:
            failures.append(_fail("diagonal differs", n))
    return failures


def check_catalan(ctx: VerifyContext) -> list[str]:
    """C = 1 + xC^2 and the reference prefix."""
    failures = []
    c = series_mod.catalan_series(12)
    x = series_mod.TruncatedSeries.x(12)
    if (1 + x * c * c) != c:
        failures.append("defining identity fails")
    if c.integer_coefficients()[:7] != (1, 1, 2, 5, 14, 42, 132):
        failures.append("prefix differs")
    return failures


def check_series_reference_coefficients(ctx: VerifyContext) -> list[str]:
    """Closed-form slices match their reference expansions."""
    failures = []
    mu0 = series_mod.mu_u_series(0, 11).integer_coefficients()
    if mu0[3:8] != (1, 6, 26, 100, 365):
        failures.append(_fail("tier-0 slice differs", mu0))
    for n in range(1, 12):
        expected = _catalan_number(n) - 2 ** (n - 1)
        if mu0[n] != expected:
            failures.append(_fail("tier-0 closed form differs", n))
    mu1 = series_mod.mu_u_series(1, 11).integer_coefficients()
    if mu1[4:] != (2, 21, 148, 884, 4852, 25407, 129480, 649576):
        failures.append(_fail("tier-1 slice differs", mu1))
    mu2 = series_mod.mu_u_series(2, 11).integer_coefficients()
    if mu2[5:] != (10, 160, 1636, 13704, 102876, 722772, 4867904):
        failures.append(_fail("tier-2 slice differs", mu2))
    t2 = series_mod.tier_series(2, 7).integer_coefficients()
    if t2 != (0, 0, 0, 0, 2, 26, 228, 1702):
        failures.append(_fail("tier-2 counts differ", t2))
    return failures


def _catalan_number(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def check_tier_series_vs_table(ctx: VerifyContext) -> list[str]:
    """Series coefficients equal the brute-force exact-tier columns."""
    failures = []
    top = ctx.cap(10)
    exact = tables_mod.exact_tier_table(top, workers=ctx.workers)
    for t in (0, 1, 2):
        coeffs = series_mod.tier_series(t, top).integer_coefficients()
        for n in range(1, top + 1):
            if coeffs[n] != exact.entry(n, t):
                failures.append(_fail("coefficient differs", (t, n)))
    return failures


def check_wilf_series(ctx: VerifyContext) -> list[str]:
    """Wilf series equals the cumulative tier<=1 column and the avoidance count."""
    failures = []
    top = ctx.cap(10)
    coeffs = series_mod.wilf_series(top).integer_coefficients()
    cumulative = tables_mod.cumulative_tier_table(top, workers=ctx.workers)
    av_counts = basis_mod.enumerate_av(WILF_BASIS, top, workers=ctx.workers)
    if coeffs[0] != 1:
        failures.append("constant term differs")
    for n in range(1, top + 1):
        expected = _cumulative_tier1(cumulative, n)
        if coeffs[n] != expected or coeffs[n] != av_counts[n - 1]:
            failures.append(_fail("coefficient differs", n))
    return failures


def check_series_vs_recurrence(ctx: VerifyContext) -> list[str]:
    """Series slices match the recurrence column sums for n <= 12."""
    failures = []
    rec = tables_mod.refined_counts_recurrence(12)
    for j in (0, 1, 2):
        coeffs = series_mod.mu_u_series(j, 12).coefficients
        for n in range(1, 13):
            expected = sum(rec.mu_u(n, j, k) for k in range(1, n + 1))
            actual = coeffs[n] / factorial(j)
            if actual != expected:
                failures.append(_fail("slice differs", (j, n)))
    return failures


def check_integer_coefficients(ctx: VerifyContext) -> list[str]:
    """Assembled counting series are integral despite rational intermediates."""
    failures = []
    for name, s in (
        ("tier0", series_mod.tier_series(0, 16)),
        ("tier1", series_mod.tier_series(1, 16)),
        ("tier2", series_mod.tier_series(2, 16)),
        ("mu0", series_mod.mu_u_series(0, 16)),
        ("mu1", series_mod.mu_u_series(1, 16)),
        ("mu2", series_mod.mu_u_series(2, 16)),
        ("wilf", series_mod.wilf_series(16)),
    ):
        try:
            s.integer_coefficients()
        except ValueError as exc:
            failures.append(_fail("non-integer series", name, exc))
    return failures


def check_flat_complement(ctx: VerifyContext) -> list[str]:
    """Tier-0 slice plus the flat-class series rebuild the Catalan series."""
    order = 16
    mu0 = series_mod.mu_u_series(0, order)
    x = series_mod.TruncatedSeries.x(order)
    one = series_mod.TruncatedSeries.one(order)
    flat = (one - x) / (one - 2 * x)
    if (mu0 + flat) != series_mod.catalan_series(order):
        return ["complement identity fails"]
    return []


SUITES: dict[str, list[tuple[str, Callable]]] = {
    "permcore": [
        ("containment agrees with the subsequence oracle", check_containment_oracle),
        ("edit round trips", check_edit_round_trip),
        ("lexicographic enumeration, rank, unrank", check_enumeration),
        ("inversion bookkeeping", check_inversion_bookkeeping),
    ],
    "sorter": [
        ("tier oracles agree (simulation, greedy, DP)", check_tier_oracles),
        ("every pass makes progress", check_pass_progress),
        ("series machine sorts iff the tier fits", check_machine_equivalence),
        ("series machine conserves entries", check_machine_conservation),
    ],
    "pairs": [
        ("down pairs mean 231, up pairs mean 132", check_claesson),
        ("occurrences yield oriented witness pairs", check_witness_extraction),
        ("deletion never raises the tier", check_deletion_monotone),
        ("maximal tier is n-2", check_max_tier),
        ("classes partition every S_n", check_class_partition),
        ("position-of-1 exclusions hold", check_position_exclusions),
        ("reversal swaps the oriented classes", check_reversal_per_perm),
    ],
    "tables": [
        ("exact-tier table matches the reference rows", check_exact_table),
        ("cumulative table accumulates correctly", check_cumulative_table),
        ("recurrences equal brute force", check_recurrence_vs_bruteforce),
        ("reversal count identities hold", check_reversal_count_identities),
        ("suffix-sum identity holds", check_suffix_sum_identity),
        ("flat-class closed form is binomial", check_eta_closed_form),
        ("class decomposition rebuilds the tier counts", check_class_decomposition),
    ],
    "basis": [
        ("tier<=0 basis is {231}", check_basis_tier0),
        ("tier<=1 basis matches the reference set", check_basis_tier1),
        ("tier<=2 basis matches the reference set", check_basis_tier2),
        ("tier<=3 search reproduces the length histogram", check_basis_tier3),
        ("search strategies agree", check_strategies_agree),
        ("avoiding the tier<=1 basis is exactly tier<=1", check_avoidance_tier1),
        ("avoiding the tier<=2 basis is exactly tier<=2", check_avoidance_tier2),
        ("the Wilf pair counts agree", check_wilf_pair),
        ("reported basis elements are minimal", check_basis_minimality),
    ],
    "entringer": [
        ("triangle recurrence and reference rows", check_entringer_triangle),
        ("alternating enumeration matches the triangle", check_alternating_enumeration),
        ("maximal-tier family matches the shifted triangle", check_family_counts),
        ("bijection round trips and lands correctly", check_bijection_round_trip),
        ("table diagonal runs through the Euler numbers", check_table_diagonal),
    ],
    "series": [
        ("catalan series satisfies its identity", check_catalan),
        ("closed-form slices match reference coefficients", check_series_reference_coefficients),
        ("tier series match the brute-force columns", check_tier_series_vs_table),
        ("wilf series matches column and enumeration", check_wilf_series),
        ("series slices match the recurrence sums", check_series_vs_recurrence),
        ("assembled series are integral", check_integer_coefficients),
        ("tier-0 slice complements the flat class", check_flat_complement),
    ],
}

_SUITE_ORDER = ["permcore", "sorter", "pairs", "tables", "basis", "entringer", "series"]


def suite_names() -> list[str]:
    return _SUITE_ORDER + ["all"]


def run_suite(
    name: str,
    max_n: int = 9,
    workers: int | None = None,
    out: Callable[[str], None] = print,
) -> bool:
    """
    Run one named suite (or "all"); prints one PASS/FAIL line per check.

    Returns True when every check passed.
    """
    if name == "all":
        names = _SUITE_ORDER
    elif name in SUITES:
        names = [name]
    else:
        raise ValueError(
            f"unknown suite {name!r}; pick from {', '.join(suite_names())}"
        )
    ctx = VerifyContext(max_n=max_n, workers=workers)
    all_ok = True
    for suite in names:
        for label, fn in SUITES[suite]:
            started = time.perf_counter()
            failures = fn(ctx)
            elapsed = time.perf_counter() - started
            if failures:
                all_ok = False
                out(f"FAIL  [{suite}] {label} ({elapsed:.1f}s)")
                for failure in failures[:5]:
                    out(f"      {failure}")
            else:
                out(f"PASS  [{suite}] {label} ({elapsed:.1f}s)")
    return all_ok
