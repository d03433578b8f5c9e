"""
Exact count tables for permutations classified by length, rev-tier, and the
position of 1.

The brute-force route sweeps S_n once, classifying every permutation with
the fused separated-pair scan, and every table (exact tier, cumulative
tier, refined class counts) is read off that single sweep.  The recurrence
route rebuilds the refined counts from the insert-a-new-minimum transfer
rules and serves as the cross-check partner; neither route may replace the
other.  All counts are exact Python integers.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from math import comb

from . import parallel
from .pairs import _tier_class_position
from .permutation import enumerate_sn

__all__ = [
    "TierCountTable",
    "RefinedCountTable",
    "exact_tier_table",
    "cumulative_tier_table",
    "refined_counts_bruteforce",
    "refined_counts_recurrence",
    "eta_closed_form",
    "tier_table_csv",
    "tier_table_json_dict",
    "refined_table_csv",
    "refined_table_json_dict",
]

# Full sweeps beyond this length need an explicit opt-in (11! is ~40e6
# permutations, minutes of work); nothing above ABSOLUTE_SWEEP_CAP is run.
DEFAULT_SWEEP_CAP = 10
ABSOLUTE_SWEEP_CAP = 11

_CLASS_NAMES = ("none", "down", "up")  # sweep class codes 0, 1, 2


def _check_sweep_cap(max_n: int, allow_slow: bool) -> None:
    if max_n < 1:
        raise ValueError(f"max_n must be at least 1, got {max_n}")
    if max_n > ABSOLUTE_SWEEP_CAP:
        raise ValueError(
            f"max_n {max_n} exceeds the hard sweep cap {ABSOLUTE_SWEEP_CAP}"
        )
    if max_n > DEFAULT_SWEEP_CAP and not allow_slow:
        raise ValueError(
            f"max_n {max_n} exceeds the default cap {DEFAULT_SWEEP_CAP}; "
            "pass allow_slow=True (CLI: --allow-slow) to run it"
        )


def _tier_slots(n: int) -> int:
    return max(n - 1, 1)  # tiers run 0 .. n-2; length 1 still needs a slot


def _count_chunk(n: int, start: int, stop: int) -> list[int]:
    """Classify one rank range; returns flat counts[(cls, tier, k)]."""
    tslots = _tier_slots(n)
    counts = [0] * (3 * tslots * n)
    fused = _tier_class_position
    for perm in enumerate_sn(n, (start, stop)):
        tier, cls, k = fused(perm)
        counts[(cls * tslots + tier) * n + (k - 1)] += 1
    return counts


@functools.lru_cache(maxsize=16)
def _swept_counts(n: int, workers: int | None) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """
    Sweep S_n once; result[cls][tier][k-1] is an exact count.

    Cached so that the exact, cumulative, and refined tables, the maximal
    tier family checks, and the verify suites share one sweep per length.
    """
    chunks = parallel.scan_sn(n, _count_chunk, workers=workers)
    tslots = _tier_slots(n)
    flat = [0] * (3 * tslots * n)
    for chunk in chunks:
        for i, c in enumerate(chunk):
            flat[i] += c
    return tuple(
        tuple(
            tuple(flat[(cls * tslots + t) * n + k] for k in range(n))
            for t in range(tslots)
        )
        for cls in range(3)
    )


def swept_class_counts(
    n: int, workers: int | None = None
) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Public cached accessor for the per-length sweep (see _swept_counts)."""
    return _swept_counts(n, workers)


@dataclass(frozen=True)
class TierCountTable:
    """
    Counts of permutations by length and rev-tier.

    ``rows[n-1]`` holds the counts for length n; for the "exact" kind the
    row covers tiers 0..max(n-2, 0), for "cumulative" every row covers
    tiers 0..max(max_n-2, 0) and is non-decreasing, ending at n!.
    """

    kind: str
    max_n: int
    rows: tuple[tuple[int, ...], ...]

    def entry(self, n: int, t: int) -> int:
        if not 1 <= n <= self.max_n:
            raise ValueError(f"length {n} outside table range 1..{self.max_n}")
        row = self.rows[n - 1]
        if self.kind == "cumulative" and t >= len(row):
            raise ValueError(f"tier {t} outside table columns")
        if t >= len(row):
            return 0
        return row[t]


def exact_tier_table(
    max_n: int, workers: int | None = None, allow_slow: bool = False
) -> TierCountTable:
    """
    Brute-force table of counts by length and exact rev-tier.

    >>> exact_tier_table(5).rows[4]
    (42, 47, 26, 5)
    """
    _check_sweep_cap(max_n, allow_slow)
    rows = []
    for n in range(1, max_n + 1):
        swept = _swept_counts(n, workers)
        width = max(n - 1, 1)
        rows.append(
            tuple(
                sum(swept[cls][t][k] for cls in range(3) for k in range(n))
                for t in range(width)
            )
        )
    return TierCountTable("exact", max_n, tuple(rows))


def cumulative_tier_table(
    max_n: int, workers: int | None = None, allow_slow: bool = False
) -> TierCountTable:
    """
    Counts of permutations of length n and rev-tier at most t.

    >>> cumulative_tier_table(7).entry(7, 2)
    3380
    """
    exact = exact_tier_table(max_n, workers, allow_slow)
    width = max(max_n - 1, 1)
    rows = []
    for n in range(1, max_n + 1):
        total = 0
        row = []
        exact_row = exact.rows[n - 1]
        for t in range(width):
            if t < len(exact_row):
                total += exact_row[t]
            row.append(total)
        rows.append(tuple(row))
    return TierCountTable("cumulative", max_n, tuple(rows))


@dataclass(frozen=True)
class RefinedCountTable:
    """
    Refined counts by class, length n, rev-tier t, and position k of 1.

    eta(n, k) counts the permutations with no separated pair (all of tier 0);
    mu_u / mu_d count the classes whose smallest separated pair is up / down
    oriented.  Out-of-range indices read as 0.  f(n, t, k) is the total over
    the three classes.
    """

    max_n: int
    source: str
    _eta: dict = field(repr=False)
    _mu_u: dict = field(repr=False)
    _mu_d: dict = field(repr=False)

    def eta(self, n: int, k: int) -> int:
        return self._eta.get((n, k), 0)

    def mu_u(self, n: int, t: int, k: int) -> int:
        return self._mu_u.get((n, t, k), 0)

    def mu_d(self, n: int, t: int, k: int) -> int:
        return self._mu_d.get((n, t, k), 0)

    def f(self, n: int, t: int, k: int) -> int:
        total = self.mu_u(n, t, k) + self.mu_d(n, t, k)
        if t == 0:
            total += self.eta(n, k)
        return total

    def tier_total(self, n: int, t: int) -> int:
        return sum(self.f(n, t, k) for k in range(1, n + 1))


def refined_counts_bruteforce(
    max_n: int, workers: int | None = None, allow_slow: bool = False
) -> RefinedCountTable:
    """Refined counts from the exhaustive sweep."""
    _check_sweep_cap(max_n, allow_slow)
    eta: dict = {}
    mu_u: dict = {}
    mu_d: dict = {}
    for n in range(1, max_n + 1):
        swept = _swept_counts(n, workers)
        tslots = _tier_slots(n)
        for k in range(1, n + 1):
            if swept[0][0][k - 1]:
                eta[(n, k)] = swept[0][0][k - 1]
        for t in range(tslots):
            for k in range(1, n + 1):
                if swept[2][t][k - 1]:
                    mu_u[(n, t, k)] = swept[2][t][k - 1]
                if swept[1][t][k - 1]:
                    mu_d[(n, t, k)] = swept[1][t][k - 1]
    return RefinedCountTable(max_n, "bruteforce", eta, mu_u, mu_d)


def refined_counts_recurrence(max_n: int) -> RefinedCountTable:
    """
    Refined counts from the insertion recurrences.

    Inserting a new minimum into a permutation with its 1 at position i
    yields, depending on the insertion position k, a member of the same or
    the other oriented class; inverting those transfer rules gives:

      eta(n+1, k)     = eta(n, k) + eta(n, k-1)
      mu_u(n+1, 0, k) = sum_{i >= k+1} eta(n, i)     + sum_{i >= k-1} mu_u(n, 0, i)
      mu_u(n+1, t, k) = sum_{i >= k+1} mu_d(n, t, i) + sum_{i >= k-1} mu_u(n, t, i)
      mu_d(n+1, 1, k) = sum_{i <= k-2} eta(n, i)     + sum_{i <= k}   mu_d(n, 1, i)
      mu_d(n+1, t, k) = sum_{i <= k-2} mu_u(n, t-2, i) + sum_{i <= k} mu_d(n, t, i)

    with the last two rules for t = 1 and t >= 2 respectively.
    """
    if max_n < 1:
        raise ValueError(f"max_n must be at least 1, got {max_n}")
    eta: dict = {(1, 1): 1}
    mu_u: dict = {}
    mu_d: dict = {}
    for n in range(1, max_n):
        for k in range(1, n + 2):
            value = eta.get((n, k), 0) + eta.get((n, k - 1), 0)
            if value:
                eta[(n + 1, k)] = value
        for t in range(0, n):
            for k in range(1, n + 2):
                if t == 0:
                    value = sum(eta.get((n, i), 0) for i in range(k + 1, n + 1))
                else:
                    value = sum(mu_d.get((n, t, i), 0) for i in range(k + 1, n + 1))
                value += sum(
                    mu_u.get((n, t, i), 0) for i in range(max(k - 1, 1), n + 1)
                )
                if value:
                    mu_u[(n + 1, t, k)] = value
        for t in range(1, n + 1):
            for k in range(1, n + 2):
                if t == 1:
                    value = sum(eta.get((n, i), 0) for i in range(1, k - 1))
                else:
                    value = sum(
                        mu_u.get((n, t - 2, i), 0) for i in range(1, k - 1)
                    )
                value += sum(mu_d.get((n, t, i), 0) for i in range(1, k + 1))
                if value:
                    mu_d[(n + 1, t, k)] = value
    return RefinedCountTable(max_n, "recurrence", eta, mu_u, mu_d)


def eta_closed_form(n: int, k: int) -> int:
    """
    Closed form for the no-separated-pair counts: binomial(n-1, k-1).

    >>> eta_closed_form(4, 2)
    3
    >>> sum(eta_closed_form(6, k) for k in range(1, 7))
    32
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return comb(n - 1, k - 1)


# --- emitters ---------------------------------------------------------------


def tier_table_csv(table: TierCountTable) -> str:
    width = max(table.max_n - 1, 1)
    lines = ["n," + ",".join(f"t={t}" for t in range(width))]
    for n in range(1, table.max_n + 1):
        row = table.rows[n - 1]
        cells = [str(row[t]) if t < len(row) else "" for t in range(width)]
        lines.append(f"{n}," + ",".join(cells))
    return "\n".join(lines) + "\n"


def tier_table_json_dict(table: TierCountTable) -> dict:
    return {
        "schema": "revpass.table/1",
        "kind": table.kind,
        "max_n": table.max_n,
        "rows": [list(row) for row in table.rows],
    }


def _refined_entries(table: RefinedCountTable) -> list[tuple[str, int, int, int, int]]:
    entries = []
    for (n, k), c in table._eta.items():
        entries.append(("eta", n, 0, k, c))
    for (n, t, k), c in table._mu_u.items():
        entries.append(("mu_u", n, t, k, c))
    for (n, t, k), c in table._mu_d.items():
        entries.append(("mu_d", n, t, k, c))
    entries.sort()
    return entries


def refined_table_csv(table: RefinedCountTable) -> str:
    lines = ["family,n,t,k,count"]
    for family, n, t, k, c in _refined_entries(table):
        lines.append(f"{family},{n},{t},{k},{c}")
    return "\n".join(lines) + "\n"


def refined_table_json_dict(table: RefinedCountTable) -> dict:
    return {
        "schema": "revpass.refined/1",
        "max_n": table.max_n,
        "source": table.source,
        "entries": [
            {"family": family, "n": n, "t": t, "k": k, "count": c}
            for family, n, t, k, c in _refined_entries(table)
        ],
    }
