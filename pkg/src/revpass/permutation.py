"""
Core operations on permutations in one-line notation.

A permutation of length n is represented as a tuple of the values 1..n,
e.g. ``(2, 4, 1, 3)`` for the permutation usually written 2413.  The empty
tuple is the (unique) permutation of length 0.  Positions are 1-based in
all documentation and in the text formats; internal indexing is 0-based.

Text format: a compact digit string ("2413") is accepted and produced only
for n <= 9, where it is unambiguous.  Longer permutations must use comma-
or space-separated values ("10, 2, 1, ...").
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]

__all__ = [
    "Perm",
    "PermutationError",
    "InversionProfile",
    "as_permutation",
    "parse_permutation",
    "format_permutation",
    "identity",
    "reverse",
    "inverse",
    "contains_pattern",
    "delete_entry",
    "insert_min",
    "inversion_profile",
    "rank",
    "unrank",
    "enumerate_sn",
]

# enumerate_sn refuses anything bigger; 12! is already ~479M permutations.
MAX_ENUMERATION_LENGTH = 12


class PermutationError(ValueError):
    """Raised for text or value sequences that are not permutations of 1..n."""


def as_permutation(values: Iterable[int]) -> Perm:
    """
    Validate a value sequence and return it as a permutation tuple.

    >>> as_permutation([2, 4, 1, 3])
    (2, 4, 1, 3)
    >>> as_permutation([2, 4, 1, 4])
    Traceback (most recent call last):
        ...
    revpass.permutation.PermutationError: duplicate value 4
    """
    perm = tuple(values)
    n = len(perm)
    seen = [False] * (n + 1)
    for v in perm:
        if not isinstance(v, int) or isinstance(v, bool):
            raise PermutationError(f"non-integer value {v!r}")
        if not 1 <= v <= n:
            raise PermutationError(
                f"value {v} out of range; a permutation of length {n} "
                f"must use each of 1..{n} exactly once"
            )
        if seen[v]:
            raise PermutationError(f"duplicate value {v}")
        seen[v] = True
    return perm


def parse_permutation(text: str) -> Perm:
    """
    Parse a permutation from compact or separated text form.

    >>> parse_permutation("2413")
    (2, 4, 1, 3)
    >>> parse_permutation("2, 4, 1, 3")
    (2, 4, 1, 3)
    >>> parse_permutation("10 2 1 3 4 5 6 7 8 9")[0]
    10
    """
    stripped = text.strip()
    if stripped == "":
        raise PermutationError("empty permutation text")
    if "," in stripped or any(c.isspace() for c in stripped):
        tokens = stripped.replace(",", " ").split()
    elif stripped.isdigit():
        # Compact digit form: one value per character, so only valid for n <= 9.
        tokens = list(stripped)
    else:
        raise PermutationError(f"cannot parse permutation from {text!r}")
    try:
        values = [int(tok) for tok in tokens]
    except ValueError:
        bad = next(tok for tok in tokens if not tok.lstrip("-").isdigit())
        raise PermutationError(f"non-integer token {bad!r}") from None
    return as_permutation(values)


def format_permutation(perm: Sequence[int]) -> str:
    """
    Render a permutation as text: compact for n <= 9, separated beyond.

    >>> format_permutation((2, 4, 1, 3))
    '2413'
    >>> format_permutation(tuple([10] + list(range(1, 10))))
    '10,1,2,3,4,5,6,7,8,9'
    """
    if len(perm) <= 9:
        return "".join(str(v) for v in perm)
    return ",".join(str(v) for v in perm)


def identity(n: int) -> Perm:
    """The identity permutation 1 2 ... n."""
    return tuple(range(1, n + 1))


def reverse(perm: Sequence[int]) -> Perm:
    """
    Reverse the order of the entries.

    >>> reverse((2, 4, 1, 3))
    (3, 1, 4, 2)
    """
    return tuple(reversed(perm))


def inverse(perm: Sequence[int]) -> Perm:
    """
    The group inverse: position i of the result holds the position of i in perm.

    >>> inverse((2, 4, 1, 3))
    (3, 1, 4, 2)
    >>> inverse(inverse((3, 1, 4, 2)))
    (3, 1, 4, 2)
    """
    out = [0] * len(perm)
    for pos0, v in enumerate(perm):
        out[v - 1] = pos0 + 1
    return tuple(out)


def contains_pattern(host: Sequence[int], pattern: Sequence[int]) -> bool:
    """
    True iff some subsequence of host is order-isomorphic to pattern.

    Backtracking over host positions, pruning by remaining length and by the
    value window implied by the already-matched pattern entries.  Worst-case
    exponential in the pattern length; intended for short patterns.

    >>> contains_pattern((4, 1, 2, 7, 3, 5, 6), (2, 3, 1))
    True
    >>> contains_pattern((4, 1, 2, 7, 3, 5, 6), (3, 2, 1))
    False
    >>> contains_pattern((2, 4, 1, 3), (2, 4, 1, 3))
    True
    """
    k = len(pattern)
    n = len(host)
    if k == 0:
        return True
    if k > n:
        return False
    # For pattern index j, the tightest already-placed bounds on its value:
    # lo[j]/hi[j] are earlier pattern indices whose values must sit just
    # below/above pattern[j], or -1 when there is no such constraint.
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

    chosen_pos = [0] * k
    chosen_val = [0] * k

    def extend(j: int, start: int) -> bool:
        last = n - (k - j)  # prune: must leave room for the rest of the pattern
        for pos in range(start, last + 1):
            v = host[pos]
            if lo[j] >= 0 and v < chosen_val[lo[j]]:
                continue
            if hi[j] >= 0 and v > chosen_val[hi[j]]:
                continue
            if j + 1 == k:
                return True
            chosen_pos[j] = pos
            chosen_val[j] = v
            if extend(j + 1, pos + 1):
                return True
        return False

    return extend(0, 0)


def delete_entry(perm: Sequence[int], position: int) -> Perm:
    """
    Remove the entry at a 1-based position and rescale the larger values.

    >>> delete_entry((2, 4, 1, 3), 2)
    (2, 1, 3)
    >>> delete_entry((1,), 1)
    ()
    """
    n = len(perm)
    if not 1 <= position <= n:
        raise PermutationError(f"position {position} out of range 1..{n}")
    removed = perm[position - 1]
    return tuple(
        v - 1 if v > removed else v
        for i, v in enumerate(perm)
        if i != position - 1
    )


def insert_min(perm: Sequence[int], position: int) -> Perm:
    """
    Shift all values up by one and insert a new minimum 1 at a 1-based position.

    >>> insert_min((2, 3, 1), 4)
    (3, 4, 2, 1)
    >>> insert_min((), 1)
    (1,)
    """
    n = len(perm)
    if not 1 <= position <= n + 1:
        raise PermutationError(f"position {position} out of range 1..{n + 1}")
    shifted = [v + 1 for v in perm]
    shifted.insert(position - 1, 1)
    return tuple(shifted)


@dataclass(frozen=True)
class InversionProfile:
    """
    Inversion counts of a permutation, attributed two ways.

    ``inv_left[i]`` (0-based i) counts the inversions whose left/larger entry
    sits at position i+1; ``inv_right[v]`` (0-based v) counts the inversions
    whose right/smaller entry is the value v+1.  Both sum to the total
    inversion count.
    """

    inv_left: tuple[int, ...]
    inv_right: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.inv_left)


def inversion_profile(perm: Sequence[int]) -> InversionProfile:
    """
    >>> inversion_profile((3, 1, 4, 2)).inv_left
    (2, 0, 1, 0)
    >>> inversion_profile((3, 1, 4, 2)).inv_right
    (1, 2, 0, 0)
    """
    n = len(perm)
    inv_left = [0] * n
    inv_right = [0] * n
    for i in range(n):
        vi = perm[i]
        for j in range(i + 1, n):
            if perm[j] < vi:
                inv_left[i] += 1
                inv_right[perm[j] - 1] += 1
    return InversionProfile(tuple(inv_left), tuple(inv_right))


def rank(perm: Sequence[int]) -> int:
    """
    Lexicographic rank of a permutation within S_n, counting from 0.

    >>> rank((2, 3, 1))
    3
    >>> rank(())
    0
    """
    n = len(perm)
    r = 0
    for i in range(n):
        smaller_after = sum(1 for j in range(i + 1, n) if perm[j] < perm[i])
        r = r * (n - i) + smaller_after
    return r


def unrank(n: int, r: int) -> Perm:
    """
    The permutation of S_n with lexicographic rank r.

    >>> unrank(3, 3)
    (2, 3, 1)
    >>> all(rank(unrank(4, r)) == r for r in range(24))
    True
    """
    if n < 0:
        raise PermutationError(f"negative length {n}")
    total = factorial(n)
    if not 0 <= r < total:
        raise PermutationError(f"rank {r} out of range 0..{total - 1}")
    remaining = list(range(1, n + 1))
    out = []
    for i in range(n, 0, -1):
        block = factorial(i - 1)
        idx, r = divmod(r, block)
        out.append(remaining.pop(idx))
    return tuple(out)


def _advance(values: list[int]) -> bool:
    """Step a value list to its lexicographic successor in place."""
    n = len(values)
    i = n - 2
    while i >= 0 and values[i] >= values[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while values[j] <= values[i]:
        j -= 1
    values[i], values[j] = values[j], values[i]
    values[i + 1 :] = values[:i:-1]
    return True


def enumerate_sn(
    n: int, rank_range: tuple[int, int] | None = None
) -> Iterator[Perm]:
    """
    Yield the permutations of S_n in lexicographic order.

    ``rank_range`` restricts the stream to ranks [a, b); disjoint rank ranges
    partition S_n exactly, which is what the parallel sweeps rely on.

    >>> [format_permutation(p) for p in enumerate_sn(3)]
    ['123', '132', '213', '231', '312', '321']
    >>> list(enumerate_sn(3, (3, 5)))
    [(2, 3, 1), (3, 1, 2)]
    """
    if not 0 <= n <= MAX_ENUMERATION_LENGTH:
        raise PermutationError(
            f"length {n} outside supported range 0..{MAX_ENUMERATION_LENGTH}"
        )
    if rank_range is None:
        yield from itertools.permutations(range(1, n + 1))
        return
    start, stop = rank_range
    total = factorial(n)
    if not (0 <= start <= total and 0 <= stop <= total):
        raise PermutationError(f"rank range {rank_range} outside [0, {total}]")
    if start >= stop:
        return
    current = list(unrank(n, start))
    yield tuple(current)
    for _ in range(stop - start - 1):
        _advance(current)
        yield tuple(current)
