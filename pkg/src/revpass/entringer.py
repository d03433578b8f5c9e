"""
Entringer numbers, alternating permutations, and the maximal-tier bijection.

E(n, k) counts the down/up alternating permutations of length n that begin
with k; row sums give the Euler numbers.  The permutations of length n with
the maximal rev-tier n-2 form another family with the same refined counts,
indexed by the position of their 1, and the two are linked by an explicit
bijection built from inversion counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import parallel
from .pairs import _tier_class_position, rev_tier_by_pairs
from .permutation import Perm, enumerate_sn, inversion_profile

__all__ = [
    "EntringerTable",
    "MaximalTierFamily",
    "entringer_table",
    "is_alternating_downup",
    "enumerate_alternating",
    "maximal_tier_family",
    "bijection_f",
    "bijection_f_inverse",
]

MAX_ALTERNATING_LENGTH = 11
MAX_FAMILY_LENGTH = 10


@dataclass(frozen=True)
class EntringerTable:
    """Triangle of E(n, k) for 1 <= k <= n <= max_n, with row sums."""

    max_n: int
    rows: tuple[tuple[int, ...], ...]
    row_sums: tuple[int, ...]

    def entry(self, n: int, k: int) -> int:
        if not (1 <= k <= n <= self.max_n):
            raise ValueError(f"E({n}, {k}) outside the table")
        return self.rows[n - 1][k - 1]


def entringer_table(max_n: int) -> EntringerTable:
    """
    Build the triangle from E(1,1) = 1, E(n,1) = 0 for n > 1, and
    E(n, k) = E(n, k-1) + E(n-1, n+1-k).

    >>> entringer_table(5).rows[4]
    (0, 2, 4, 5, 5)
    >>> entringer_table(5).row_sums
    (1, 1, 2, 5, 16)
    """
    if max_n < 1:
        raise ValueError(f"max_n must be at least 1, got {max_n}")
    rows: list[tuple[int, ...]] = [(1,)]
    for n in range(2, max_n + 1):
        prev = rows[-1]
        row = [0]
        for k in range(2, n + 1):
            row.append(row[-1] + prev[n - k])  # E(n-1, n+1-k), 0-based
        rows.append(tuple(row))
    return EntringerTable(
        max_n, tuple(rows), tuple(sum(row) for row in rows)
    )


def is_alternating_downup(perm: Sequence[int]) -> bool:
    """
    True iff the permutation alternates starting with a descent.

    >>> is_alternating_downup((5, 1, 3, 2, 4))
    True
    >>> is_alternating_downup((2, 1, 5, 3, 4))
    True
    >>> is_alternating_downup((1, 2, 3))
    False
    """
    for i in range(len(perm) - 1):
        if i % 2 == 0:
            if perm[i] < perm[i + 1]:
                return False
        elif perm[i] > perm[i + 1]:
            return False
    return True


def enumerate_alternating(n: int, k: int | None = None) -> list[Perm]:
    """
    All down/up alternating permutations of length n, in lexicographic order,
    optionally restricted to those beginning with k.

    >>> [p for p in enumerate_alternating(5, 5)][:2]
    [(5, 1, 3, 2, 4), (5, 1, 4, 2, 3)]
    >>> len(enumerate_alternating(5))
    16
    """
    if not 0 <= n <= MAX_ALTERNATING_LENGTH:
        raise ValueError(
            f"length {n} outside supported range 0..{MAX_ALTERNATING_LENGTH}"
        )
    if n == 0:
        return [()] if k is None else []
    out: list[Perm] = []
    used = [False] * (n + 1)
    prefix: list[int] = []

    def extend() -> None:
        depth = len(prefix)
        if depth == n:
            out.append(tuple(prefix))
            return
        if depth == 0:
            first_choices = range(1, n + 1) if k is None else (k,)
            for v in first_choices:
                if 1 <= v <= n:
                    used[v] = True
                    prefix.append(v)
                    extend()
                    prefix.pop()
                    used[v] = False
            return
        last = prefix[-1]
        descending = depth % 2 == 1  # positions 1,3,... (1-based) descend next
        choices = range(1, last) if descending else range(last + 1, n + 1)
        for v in choices:
            if not used[v]:
                used[v] = True
                prefix.append(v)
                extend()
                prefix.pop()
                used[v] = False

    extend()
    return out


@dataclass(frozen=True)
class MaximalTierFamily:
    """All permutations of length n with rev-tier n-2, grouped by the
    position of 1 (a permutation with 1 in position k+1 is filed under k)."""

    n: int
    members_by_k: dict

    def count(self, k: int) -> int:
        return len(self.members_by_k.get(k, ()))

    @property
    def total(self) -> int:
        return sum(len(v) for v in self.members_by_k.values())


def _family_chunk(n: int, start: int, stop: int) -> list[tuple[int, Perm]]:
    target = n - 2
    found = []
    for perm in enumerate_sn(n, (start, stop)):
        tier, _, k = _tier_class_position(perm)
        if tier == target:
            found.append((k - 1, perm))
    return found


def maximal_tier_family(n: int, workers: int | None = None) -> MaximalTierFamily:
    """
    Brute-force scan of S_n for the permutations of maximal rev-tier n-2.

    >>> sorted(maximal_tier_family(6).members_by_k[2])
    [(2, 4, 1, 6, 3, 5), (2, 4, 1, 6, 5, 3)]
    """
    if not 3 <= n <= MAX_FAMILY_LENGTH:
        raise ValueError(
            f"length {n} outside supported range 3..{MAX_FAMILY_LENGTH}"
        )
    members: dict[int, list[Perm]] = {}
    for chunk in parallel.scan_sn(n, _family_chunk, workers=workers):
        for k, perm in chunk:
            members.setdefault(k, []).append(perm)
    return MaximalTierFamily(
        n, {k: tuple(sorted(v)) for k, v in sorted(members.items())}
    )


def bijection_f(pi: Sequence[int]) -> Perm:
    """
    Map an alternating permutation of length n-1 to a maximal-tier
    permutation of length n.

    Values j = 1..n-1 are placed in increasing order: value j goes into the
    (c+2)-th currently open slot when j is odd and the (c+1)-th when j is
    even, where c counts the inversions whose left entry sits at position j
    of the input; the final value n takes the last open slot.  The image has
    rev-tier n-2 and its 1 in position pi[0]+1.

    >>> bijection_f((2, 1, 5, 3, 4))
    (2, 4, 1, 6, 5, 3)
    >>> bijection_f((2, 1))
    (2, 3, 1)
    """
    if len(pi) < 1:
        raise ValueError("input must have length at least 1")
    if not is_alternating_downup(pi):
        raise ValueError("input is not alternating (down/up)")
    m = len(pi)
    n = m + 1
    inv_left = inversion_profile(pi).inv_left
    slots = list(range(n))
    out = [0] * n
    for j in range(1, m + 1):
        c = inv_left[j - 1]
        index = c + 1 if j % 2 == 1 else c
        out[slots.pop(index)] = j
    out[slots[0]] = n
    return tuple(out)


def bijection_f_inverse(sigma: Sequence[int]) -> Perm:
    """
    Inverse map: recover the alternating permutation from a maximal-tier one.

    Position j of the result takes the c-th smallest still-unused value of
    1..n-1 when j is odd and the (c+1)-th smallest when j is even, where c
    counts the inversions whose right entry is the value j in the input.

    >>> bijection_f_inverse((6, 2, 4, 7, 1, 5, 3))
    (4, 2, 6, 3, 5, 1)
    >>> bijection_f_inverse((2, 3, 1))
    (2, 1)
    """
    n = len(sigma)
    if n < 2:
        raise ValueError("input must have length at least 2")
    tier, _ = rev_tier_by_pairs(sigma)
    if tier != n - 2:
        raise ValueError(
            f"input has rev-tier {tier}, not the maximal value {n - 2}"
        )
    inv_right = inversion_profile(sigma).inv_right
    available = list(range(1, n))
    out = []
    for j in range(1, n):
        c = inv_right[j - 1]
        index = c - 1 if j % 2 == 1 else c
        if not 0 <= index < len(available):
            raise ValueError("input is not in the image of the bijection")
        out.append(available.pop(index))
    return tuple(out)
