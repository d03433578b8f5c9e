"""
Bases of the bounded rev-tier classes, and avoidance-class enumeration.

The permutations of rev-tier at most t form a class under pattern
containment; its basis B_t consists of the minimal permutations of tier
t+1, and every basis element has length between t+3 and 3(t+1).  Two search
strategies are provided: an exhaustive scan of all permutations up to the
length bound, and a frontier extension that grows the class one length at a
time and tests only insertions of a new maximum (sound because deleting the
maximum of a basis element always lands back in the class).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import parallel
from .pairs import _tier_class_position
from .permutation import Perm, as_permutation, contains_pattern, delete_entry, enumerate_sn

__all__ = [
    "BasisReport",
    "is_basis_element",
    "compute_basis",
    "avoids_all",
    "enumerate_av",
]

MAX_BASIS_LENGTH = 12
# A frontier of tier<=3 class members at length 10 is ~1.5M permutations;
# anything that needs frontiers past length 10 requires an explicit opt-in.
SLOW_BASIS_LENGTH = 11

MAX_AV_LENGTH = 11


def _tier(perm: Sequence[int]) -> int:
    return _tier_class_position(perm)[0]


def is_basis_element(perm: Sequence[int], t: int) -> bool:
    """
    True iff the permutation is minimal among those of rev-tier above t.

    Checks tier >= t+1 and that every single-entry deletion has tier <= t;
    one-entry deletions suffice because tier is monotone under containment.

    >>> is_basis_element((2, 4, 1, 3), 1)
    True
    >>> is_basis_element((3, 2, 4, 1), 1)
    False
    """
    if t < 0:
        raise ValueError(f"tier bound must be non-negative, got {t}")
    if _tier(perm) <= t:
        return False
    return all(
        _tier(delete_entry(perm, pos)) <= t for pos in range(1, len(perm) + 1)
    )


@dataclass(frozen=True)
class BasisReport:
    """Result of a basis search up to a length bound."""

    tier_bound: int
    search_bound: int
    complete: bool
    elements: tuple[Perm, ...]  # sorted by (length, values)

    def by_length(self) -> dict[int, tuple[Perm, ...]]:
        grouped: dict[int, list[Perm]] = {}
        for perm in self.elements:
            grouped.setdefault(len(perm), []).append(perm)
        return {n: tuple(v) for n, v in grouped.items()}

    def length_histogram(self) -> dict[int, int]:
        return {n: len(v) for n, v in self.by_length().items()}


def _exhaustive_chunk(n: int, start: int, stop: int, t: int) -> list[Perm]:
    found = []
    for perm in enumerate_sn(n, (start, stop)):
        if is_basis_element(perm, t):
            found.append(perm)
    return found


def _extend_chunk(
    parents: Sequence[Perm], t: int
) -> tuple[list[Perm], list[Perm]]:
    """Insert a new maximum everywhere; split results into class members
    and basis elements."""
    members: list[Perm] = []
    basis: list[Perm] = []
    for parent in parents:
        m = len(parent) + 1
        for pos in range(m):
            candidate = parent[:pos] + (m,) + parent[pos:]
            if _tier(candidate) <= t:
                members.append(candidate)
            elif all(
                _tier(delete_entry(candidate, p)) <= t for p in range(1, m + 1)
            ):
                basis.append(candidate)
    return members, basis


def compute_basis(
    t: int,
    max_len: int,
    strategy: str = "auto",
    workers: int | None = None,
    allow_slow: bool = False,
) -> BasisReport:
    """
    Find all basis elements of the tier<=t class with length <= max_len.

    The report's ``complete`` flag is true exactly when max_len reaches the
    3(t+1) length bound, i.e. when the returned set is provably all of the
    basis.

    >>> compute_basis(1, 6).elements
    ((2, 4, 1, 3), (2, 4, 3, 1), (2, 3, 1, 5, 4))
    """
    if t < 0:
        raise ValueError(f"tier bound must be non-negative, got {t}")
    if not 1 <= max_len <= MAX_BASIS_LENGTH:
        raise ValueError(f"max_len must be in 1..{MAX_BASIS_LENGTH}")
    if max_len >= SLOW_BASIS_LENGTH and not allow_slow:
        raise ValueError(
            f"max_len {max_len} needs frontiers past length "
            f"{SLOW_BASIS_LENGTH - 1}; pass allow_slow=True "
            "(CLI: --allow-slow) to run it"
        )
    if strategy == "auto":
        strategy = "exhaustive" if t <= 1 else "extension"
    if strategy not in ("exhaustive", "extension"):
        raise ValueError(f"unknown strategy {strategy!r}")

    elements: list[Perm] = []
    if strategy == "exhaustive":
        for n in range(1, max_len + 1):
            for chunk in parallel.scan_sn(
                n, _exhaustive_chunk, extra_args=(t,), workers=workers
            ):
                elements.extend(chunk)
    else:
        frontier: list[Perm] = [(1,)] if max_len >= 1 else []
        for _ in range(1, max_len):
            members: list[Perm] = []
            for chunk_members, chunk_basis in parallel.map_chunks(
                _extend_chunk, frontier, extra_args=(t,), workers=workers
            ):
                members.extend(chunk_members)
                elements.extend(chunk_basis)
            frontier = members

    elements.sort(key=lambda p: (len(p), p))
    return BasisReport(
        tier_bound=t,
        search_bound=max_len,
        complete=max_len >= 3 * (t + 1),
        elements=tuple(elements),
    )


def basis_report_json_dict(report: BasisReport) -> dict:
    from .permutation import format_permutation

    return {
        "schema": "revpass.basis/1",
        "tier_bound": report.tier_bound,
        "search_bound": report.search_bound,
        "complete": report.complete,
        "elements": {
            str(n): [format_permutation(p) for p in perms]
            for n, perms in report.by_length().items()
        },
    }


def avoids_all(perm: Sequence[int], basis: Iterable[Sequence[int]]) -> bool:
    """
    True iff the permutation contains none of the given patterns.

    >>> avoids_all((3, 5, 2, 4, 1), [(2, 3, 1)])
    False
    >>> avoids_all((3, 5, 2, 4, 1), [])
    True
    """
    return all(not contains_pattern(perm, b) for b in basis)


def _contains_with_boundary(
    host: Sequence[int], pattern: Sequence[int], head_len: int, boundary: int
) -> bool:
    """
    Occurrence test with a position split: the first ``head_len`` pattern
    entries must sit at host positions < boundary (0-based) and the rest at
    positions >= boundary.
    """
    k = len(pattern)
    n = len(host)
    if k == 0:
        return True
    lo = [-1] * k
    hi = [-1] * k
    for j in range(1, k):
        for i in range(j):
            if pattern[i] < pattern[j]:
                if lo[j] < 0 or pattern[i] > pattern[lo[j]]:
                    lo[j] = i
            else:
                if hi[j] < 0 or pattern[i] < pattern[hi[j]]:
                    hi[j] = i
    chosen_val = [0] * k

    def extend(j: int, start: int) -> bool:
        if j == k:
            return True
        if j < head_len:
            first = start
            last = boundary - (head_len - j)  # room for the rest of the head
        else:
            first = max(start, boundary)
            last = n - (k - j)  # room for the rest of the tail
        for pos in range(first, last + 1):
            v = host[pos]
            if lo[j] >= 0 and v < chosen_val[lo[j]]:
                continue
            if hi[j] >= 0 and v > chosen_val[hi[j]]:
                continue
            chosen_val[j] = v
            if extend(j + 1, pos + 1):
                return True
        return False

    return extend(0, 0)


def _av_extend_chunk(
    parents: Sequence[Perm], reduced_basis: tuple
) -> list[Perm]:
    """
    Extend avoiders by a new maximum at every slot, keeping the avoiders.

    Any new occurrence must use the new maximum, which can only play the
    pattern's maximum; so candidate (parent, slot) contains pattern b iff
    the parent contains b-minus-its-max split around the slot.
    """
    out = []
    for parent in parents:
        m = len(parent) + 1
        for pos in range(m):
            ok = True
            for reduced, head_len in reduced_basis:
                if _contains_with_boundary(parent, reduced, head_len, pos):
                    ok = False
                    break
            if ok:
                out.append(parent[:pos] + (m,) + parent[pos:])
    return out


def enumerate_av(
    basis: Iterable[Sequence[int]],
    max_n: int,
    workers: int | None = None,
) -> tuple[int, ...]:
    """
    Count the permutations of each length 1..max_n avoiding every pattern.

    Incremental one-point extension: a permutation avoiding the basis can
    only extend one that avoids it, so each length's avoiders come from the
    previous length's by inserting a new maximum and filtering.

    >>> enumerate_av([(2, 3, 1)], 5)
    (1, 2, 5, 14, 42)
    >>> enumerate_av([(4, 3, 2, 1), (4, 2, 1, 3)], 7)
    (1, 2, 6, 22, 89, 380, 1678)
    """
    if not 1 <= max_n <= MAX_AV_LENGTH:
        raise ValueError(f"max_n must be in 1..{MAX_AV_LENGTH}")
    patterns = [as_permutation(b) for b in basis]
    if any(len(b) == 0 for b in patterns):
        return (0,) * max_n  # the empty pattern occurs in everything
    reduced_basis = tuple(
        (delete_entry(b, b.index(len(b)) + 1), b.index(len(b)))
        for b in patterns
    )
    counts = []
    frontier: list[Perm] = [()]
    for _ in range(max_n):
        extended: list[Perm] = []
        for chunk in parallel.map_chunks(
            _av_extend_chunk, frontier, extra_args=(reduced_basis,), workers=workers
        ):
            extended.extend(chunk)
        frontier = extended
        counts.append(len(frontier))
    return tuple(counts)


def av_members(
    basis: Iterable[Sequence[int]], max_n: int, workers: int | None = None
) -> list[set[Perm]]:
    """
    The avoidance class itself, one set per length 1..max_n.

    Same frontier walk as enumerate_av; used by the verification suites to
    cross the avoidance picture against rev-tier sweeps without a containment
    test per permutation.
    """
    if not 1 <= max_n <= MAX_AV_LENGTH:
        raise ValueError(f"max_n must be in 1..{MAX_AV_LENGTH}")
    patterns = [as_permutation(b) for b in basis]
    if any(len(b) == 0 for b in patterns):
        return [set() for _ in range(max_n)]
    reduced_basis = tuple(
        (delete_entry(b, b.index(len(b)) + 1), b.index(len(b)))
        for b in patterns
    )
    tiers: list[set[Perm]] = []
    frontier: list[Perm] = [()]
    for _ in range(max_n):
        extended: list[Perm] = []
        for chunk in parallel.map_chunks(
            _av_extend_chunk, frontier, extra_args=(reduced_basis,), workers=workers
        ):
            extended.extend(chunk)
        frontier = extended
        tiers.append(set(frontier))
    return tiers
