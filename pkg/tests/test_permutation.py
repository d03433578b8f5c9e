import itertools

import pytest
from hypothesis import given, strategies as st

from revpass.permutation import (
    PermutationError,
    contains_pattern,
    delete_entry,
    enumerate_sn,
    format_permutation,
    identity,
    insert_min,
    inverse,
    inversion_profile,
    parse_permutation,
    rank,
    reverse,
    unrank,
)

perms = st.integers(min_value=0, max_value=7).flatmap(
    lambda n: st.permutations(list(range(1, n + 1))).map(tuple)
)

nonempty_perms = st.integers(min_value=1, max_value=7).flatmap(
    lambda n: st.permutations(list(range(1, n + 1))).map(tuple)
)


class TestParsing:
    def test_compact(self):
        assert parse_permutation("2413") == (2, 4, 1, 3)

    def test_separated(self):
        assert parse_permutation("2, 4, 1, 3") == (2, 4, 1, 3)
        assert parse_permutation("2 4 1 3") == (2, 4, 1, 3)

    def test_long_form(self):
        text = "10,2,3,4,5,6,7,8,9,1"
        assert parse_permutation(text)[0] == 10

    def test_duplicate_rejected(self):
        with pytest.raises(PermutationError, match="duplicate"):
            parse_permutation("2414")

    def test_gap_rejected(self):
        with pytest.raises(PermutationError, match="out of range"):
            parse_permutation("125")

    def test_non_integer_rejected(self):
        with pytest.raises(PermutationError):
            parse_permutation("1, a, 2")

    def test_empty_rejected(self):
        with pytest.raises(PermutationError):
            parse_permutation("   ")

    @given(nonempty_perms)
    def test_round_trip(self, perm):
        # the empty permutation has no text form; parsing "" is an error
        assert parse_permutation(format_permutation(perm)) == perm

    def test_long_permutations_use_separators(self):
        perm = tuple(range(1, 13))
        assert "," in format_permutation(perm)
        assert parse_permutation(format_permutation(perm)) == perm


def _naive_contains(host, pattern):
    k = len(pattern)
    rel = list(itertools.combinations(range(len(host)), k))
    for positions in rel:
        window = [host[p] for p in positions]
        if all(
            (window[i] < window[j]) == (pattern[i] < pattern[j])
            for i in range(k)
            for j in range(i + 1, k)
        ):
            return True
    return k == 0


class TestContainment:
    def test_known_positive(self):
        assert contains_pattern((4, 1, 2, 7, 3, 5, 6), (2, 3, 1))

    def test_known_negative(self):
        assert not contains_pattern((4, 1, 2, 7, 3, 5, 6), (3, 2, 1))

    @given(perms)
    def test_self_containment(self, perm):
        assert contains_pattern(perm, perm)

    def test_agrees_with_naive_scan(self):
        patterns = [
            p
            for m in range(1, 5)
            for p in itertools.permutations(range(1, m + 1))
        ]
        for n in range(0, 7):
            for host in enumerate_sn(n):
                for pattern in patterns:
                    assert contains_pattern(host, pattern) == _naive_contains(
                        host, pattern
                    ), (host, pattern)

    def test_empty_pattern(self):
        assert contains_pattern((), ())
        assert contains_pattern((1, 2), ())


class TestEdits:
    @pytest.mark.parametrize(
        "perm, position, expected",
        [
            ((2, 4, 1, 3), 2, (2, 1, 3)),
            ((2, 3, 1), 3, (1, 2)),
            ((2, 3, 1), 1, (2, 1)),
            ((1,), 1, ()),
        ],
    )
    def test_delete(self, perm, position, expected):
        assert delete_entry(perm, position) == expected

    @pytest.mark.parametrize(
        "perm, position, expected",
        [
            ((2, 3, 1), 4, (3, 4, 2, 1)),
            ((), 1, (1,)),
            ((1, 2), 3, (2, 3, 1)),
        ],
    )
    def test_insert_min(self, perm, position, expected):
        assert insert_min(perm, position) == expected

    def test_position_validation(self):
        with pytest.raises(PermutationError):
            delete_entry((1, 2), 3)
        with pytest.raises(PermutationError):
            insert_min((1, 2), 4)

    @given(perms, st.data())
    def test_round_trip(self, perm, data):
        position = data.draw(st.integers(1, len(perm) + 1))
        assert delete_entry(insert_min(perm, position), position) == perm

    @given(perms)
    def test_reverse_involution(self, perm):
        assert reverse(reverse(perm)) == perm

    def test_reverse_example(self):
        assert reverse((2, 1, 5, 3, 4)) == (4, 3, 5, 1, 2)


class TestEnumeration:
    def test_lexicographic_order_s3(self):
        assert [format_permutation(p) for p in enumerate_sn(3)] == [
            "123",
            "132",
            "213",
            "231",
            "312",
            "321",
        ]

    def test_s10_count(self):
        assert sum(1 for _ in enumerate_sn(10)) == 3_628_800

    @pytest.mark.parametrize("n", range(0, 7))
    def test_counts_and_distinctness(self, n):
        seen = list(enumerate_sn(n))
        assert len(seen) == len(set(seen))
        assert sorted(seen) == seen

    def test_unrank_rank_example(self):
        assert unrank(3, 3) == (2, 3, 1)
        assert rank((2, 3, 1)) == 3

    @pytest.mark.parametrize("n", range(0, 7))
    def test_rank_unrank_identity(self, n):
        for r, perm in enumerate(enumerate_sn(n)):
            assert rank(perm) == r
            assert unrank(n, r) == perm

    def test_rank_ranges_partition(self):
        full = list(enumerate_sn(6))
        bounds = [0, 100, 101, 400, 720]
        pieces = []
        for a, b in zip(bounds, bounds[1:]):
            pieces.extend(enumerate_sn(6, (a, b)))
        assert pieces == full

    def test_range_validation(self):
        with pytest.raises(PermutationError):
            list(enumerate_sn(3, (0, 7)))
        with pytest.raises(PermutationError):
            list(enumerate_sn(13))


class TestInversions:
    def test_reference_profile(self):
        profile = inversion_profile((3, 1, 4, 2))
        assert profile.inv_left == (2, 0, 1, 0)
        assert profile.inv_right == (1, 2, 0, 0)
        assert profile.total == 3

    def test_identity_is_flat(self):
        profile = inversion_profile(identity(6))
        assert profile.inv_left == (0,) * 6
        assert profile.inv_right == (0,) * 6

    @given(perms)
    def test_totals_agree(self, perm):
        profile = inversion_profile(perm)
        assert sum(profile.inv_left) == sum(profile.inv_right)
        assert sum(profile.inv_left) == sum(
            inversion_profile(inverse(perm)).inv_left
        )

    @given(perms)
    def test_minimum_never_charged(self, perm):
        if perm:
            profile = inversion_profile(perm)
            assert profile.inv_left[perm.index(1)] == 0
