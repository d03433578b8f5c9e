"""
Separated pairs and the rev-tier of a permutation.

For consecutive values i and i+1, the pair (i, i+1) is *separated* when some
value larger than i+1 sits strictly between their positions.  A separated
pair is *up* oriented when i precedes i+1 and *down* oriented otherwise.
The rev-tier of a permutation equals the length of the longest sequence of
separated pairs (i_1, i_1+1), ..., (i_t, i_t+1) with i_1 < ... < i_t whose
orientations alternate starting with a down pair; this module computes it
by a greedy left-to-right scan, with a dynamic-programming oracle kept
alongside permanently.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .permutation import Perm, PermutationError

__all__ = [
    "Orientation",
    "SeparatedPairProfile",
    "pair_orientation",
    "orientation_profile",
    "rev_tier_by_pairs",
    "rev_tier_by_pairs_dp",
    "classify",
    "separated_pair_profile",
    "witness_pair_from_pattern",
    "max_tier_witness",
]

# Orientation codes used by the hot paths; the enum mirrors them.
_NOT_SEPARATED = 0
_DOWN = 1
_UP = 2


class Orientation(enum.Enum):
    """Orientation of a consecutive-value pair (i, i+1) within a permutation."""

    NOT_SEPARATED = "not_separated"
    DOWN = "down"
    UP = "up"


_ORIENTATION_FROM_CODE = {
    _NOT_SEPARATED: Orientation.NOT_SEPARATED,
    _DOWN: Orientation.DOWN,
    _UP: Orientation.UP,
}


def _positions(perm: Sequence[int]) -> list[int]:
    pos = [0] * (len(perm) + 1)
    for idx, v in enumerate(perm):
        pos[v] = idx
    return pos


def _orientation_code(perm: Sequence[int], pos: Sequence[int], i: int) -> int:
    p = pos[i]
    q = pos[i + 1]
    if p < q:
        lo, hi, code = p, q, _UP
    else:
        lo, hi, code = q, p, _DOWN
    if hi - lo == 1:
        return _NOT_SEPARATED
    if hi - lo == 2:
        return code if perm[lo + 1] > i + 1 else _NOT_SEPARATED
    return code if max(perm[lo + 1 : hi]) > i + 1 else _NOT_SEPARATED


def _orientation_codes(perm: Sequence[int]) -> list[int]:
    pos = _positions(perm)
    return [_orientation_code(perm, pos, i) for i in range(1, len(perm))]


def pair_orientation(perm: Sequence[int], i: int) -> Orientation:
    """
    Orientation of the pair (i, i+1), for 1 <= i <= n-1.

    >>> pair_orientation((2, 4, 1, 3), 1)
    <Orientation.DOWN: 'down'>
    >>> pair_orientation((2, 4, 1, 3), 2)
    <Orientation.UP: 'up'>
    >>> pair_orientation((1, 2, 3, 4, 5), 3)
    <Orientation.NOT_SEPARATED: 'not_separated'>
    """
    n = len(perm)
    if not 1 <= i <= n - 1:
        raise PermutationError(f"pair index {i} out of range 1..{n - 1}")
    return _ORIENTATION_FROM_CODE[_orientation_code(perm, _positions(perm), i)]


def orientation_profile(perm: Sequence[int]) -> tuple[Orientation, ...]:
    """Orientations of all pairs (i, i+1) for i = 1..n-1, in order."""
    return tuple(_ORIENTATION_FROM_CODE[c] for c in _orientation_codes(perm))


def rev_tier_by_pairs(perm: Sequence[int]) -> tuple[int, list[int]]:
    """
    Rev-tier via the greedy scan, with the witness pair indices.

    Scans i = 1..n-1 once, taking the first down-oriented pair, then the next
    up-oriented pair after it, and so on alternating.  Returns the tier and
    the list of chosen pair indices (the tier equals its length).

    >>> rev_tier_by_pairs((2, 4, 1, 3))
    (2, [1, 2])
    >>> rev_tier_by_pairs((1, 2, 3))
    (0, [])
    """
    witness: list[int] = []
    want = _DOWN
    pos = _positions(perm)
    for i in range(1, len(perm)):
        if _orientation_code(perm, pos, i) == want:
            witness.append(i)
            want = _UP if want == _DOWN else _DOWN
    return len(witness), witness


def rev_tier_by_pairs_dp(perm: Sequence[int]) -> int:
    """
    Rev-tier via dynamic programming over all alternating pair subsequences.

    Independent oracle for the greedy scan: best[j] is the longest alternating
    subsequence of separated pairs that starts down-oriented and ends at pair
    index j; quadratic in n, kept deliberately close to the definition.
    """
    codes = _orientation_codes(perm)
    m = len(codes)
    best = [0] * m
    for j in range(m):
        if codes[j] == _DOWN:
            best[j] = 1
            for i in range(j):
                if codes[i] == _UP and best[i] > 0:
                    best[j] = max(best[j], best[i] + 1)
        elif codes[j] == _UP:
            for i in range(j):
                if codes[i] == _DOWN and best[i] > 0:
                    best[j] = max(best[j], best[i] + 1)
    return max(best, default=0)


def classify(perm: Sequence[int]) -> Orientation:
    """
    Class of a permutation by the orientation of its smallest separated pair.

    Returns ``Orientation.NOT_SEPARATED`` for permutations with no separated
    pair at all (the class avoiding both 132 and 231), otherwise the
    orientation of the separated pair with the smallest index.

    >>> classify((1, 2, 3))
    <Orientation.NOT_SEPARATED: 'not_separated'>
    >>> classify((1, 3, 2))
    <Orientation.UP: 'up'>
    >>> classify((2, 3, 1))
    <Orientation.DOWN: 'down'>
    """
    pos = _positions(perm)
    for i in range(1, len(perm)):
        code = _orientation_code(perm, pos, i)
        if code != _NOT_SEPARATED:
            return _ORIENTATION_FROM_CODE[code]
    return Orientation.NOT_SEPARATED


@dataclass(frozen=True)
class SeparatedPairProfile:
    """Full separated-pair data of one permutation."""

    orientations: tuple[Orientation, ...]
    tier: int
    class_label: Orientation
    witness: tuple[int, ...]


def separated_pair_profile(perm: Sequence[int]) -> SeparatedPairProfile:
    orientations = orientation_profile(perm)
    tier, witness = rev_tier_by_pairs(perm)
    label = Orientation.NOT_SEPARATED
    for o in orientations:
        if o is not Orientation.NOT_SEPARATED:
            label = o
            break
    return SeparatedPairProfile(orientations, tier, label, tuple(witness))


def _tier_class_position(perm: Sequence[int]) -> tuple[int, int, int]:
    """
    Fused (tier, class code, position of 1) for one permutation.

    Hot path for the exhaustive sweeps: one pass over the pair indices
    computes the greedy tier and remembers the first separated pair's
    orientation.  Class codes are 0 = no separated pair, 1 = down, 2 = up;
    the position of 1 is 1-based.  Must agree with rev_tier_by_pairs and
    classify everywhere (enforced by exhaustive tests).
    """
    n = len(perm)
    pos = [0] * (n + 2)
    idx = 0
    for v in perm:
        pos[v] = idx
        idx += 1
    tier = 0
    want_down = True
    first = 0
    for i in range(1, n):
        p = pos[i]
        q = pos[i + 1]
        if p < q:
            d = q - p
            if d == 1:
                continue
            if d == 2:
                if perm[p + 1] <= i + 1:
                    continue
            elif max(perm[p + 1 : q]) <= i + 1:
                continue
            if first == 0:
                first = _UP
            if not want_down:
                tier += 1
                want_down = True
        else:
            d = p - q
            if d == 1:
                continue
            if d == 2:
                if perm[q + 1] <= i + 1:
                    continue
            elif max(perm[q + 1 : p]) <= i + 1:
                continue
            if first == 0:
                first = _DOWN
            if want_down:
                tier += 1
                want_down = False
    return tier, first, (pos[1] + 1 if n else 0)


def witness_pair_from_pattern(
    perm: Sequence[int], occurrence: Sequence[int], kind: int
) -> int:
    """
    Turn a 231 (resp. 132) occurrence into a down (resp. up) separated pair.

    ``occurrence`` gives the three values in position order.  The returned
    index i satisfies c <= i <= a-1 for kind 231 and a <= i <= c-1 for kind
    132, where a and c are the first and last occurrence values; (i, i+1) is
    separated with the matching orientation.  Implements the value-stepping
    argument: replace the extreme value of the occurrence by its neighbour
    until the pair closes up.
    """
    if kind not in (231, 132):
        raise ValueError(f"kind must be 231 or 132, not {kind!r}")
    if len(occurrence) != 3:
        raise ValueError("occurrence must list exactly three values")
    a, b, c = occurrence
    pos = _positions(perm)
    n = len(perm)
    for v in (a, b, c):
        if not 1 <= v <= n:
            raise ValueError(f"value {v} not in the permutation")
    if not pos[a] < pos[b] < pos[c]:
        raise ValueError("occurrence values are not in position order")
    if kind == 132:
        if not a < c < b:
            raise ValueError("values do not form a 132 pattern")
        while a + 1 != c:
            if pos[a + 1] > pos[b]:
                # (a, a+1) straddles b, which is larger than both: up pair.
                return a
            a += 1  # (a+1, b, c) is again a 132 occurrence
        return a
    else:
        if not c < a < b:
            raise ValueError("values do not form a 231 pattern")
        while c + 1 != a:
            if pos[c + 1] < pos[b]:
                # c+1 sits before b, which precedes c: (c, c+1) is a down pair.
                return c
            c += 1  # (a, b, c+1) is again a 231 occurrence
        return c


def max_tier_witness(n: int) -> Perm:
    """
    A permutation of length n whose rev-tier attains the maximum n-2.

    Even values descend, then n, then 1, then the remaining odd values
    ascend; every pair (1,2) .. (n-2, n-1) is separated with alternating
    orientations.

    >>> max_tier_witness(6)
    (4, 2, 6, 1, 3, 5)
    >>> max_tier_witness(7)
    (6, 4, 2, 7, 1, 3, 5)
    >>> max_tier_witness(2)
    (2, 1)
    """
    if n < 2:
        raise PermutationError(f"no maximal-tier construction for n = {n} < 2")
    top_even = n - 2 if n % 2 == 0 else n - 1
    top_odd = n - 1 if n % 2 == 0 else n - 2
    head = list(range(top_even, 0, -2))
    tail = list(range(1, top_odd + 1, 2))
    return tuple(head + [n] + tail)
