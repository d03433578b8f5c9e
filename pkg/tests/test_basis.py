import itertools

import pytest

from revpass.basis import (
    BasisReport,
    _contains_with_boundary,
    avoids_all,
    basis_report_json_dict,
    compute_basis,
    enumerate_av,
    is_basis_element,
)
from revpass.pairs import rev_tier_by_pairs
from revpass.permutation import contains_pattern, enumerate_sn

B1 = ((2, 4, 1, 3), (2, 4, 3, 1), (2, 3, 1, 5, 4))
B2 = (
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


class TestBasisElement:
    @pytest.mark.parametrize(
        "perm, t, expected",
        [
            ((2, 4, 1, 3), 1, True),
            ((2, 4, 1, 5, 3), 2, True),
            ((3, 2, 4, 1), 1, False),  # tier 1, already in the class
            ((2, 3, 1), 0, True),
        ],
    )
    def test_reference_cases(self, perm, t, expected):
        assert is_basis_element(perm, t) is expected

    def test_rejects_negative_bound(self):
        with pytest.raises(ValueError):
            is_basis_element((1,), -1)


class TestComputeBasis:
    def test_tier0_is_knuth(self):
        report = compute_basis(0, 3)
        assert report.elements == ((2, 3, 1),)
        assert report.complete

    def test_tier1_reference_set(self):
        report = compute_basis(1, 6)
        assert report.elements == B1
        assert report.complete
        assert report.length_histogram() == {4: 2, 5: 1}

    def test_tier2_reference_set_via_extension(self):
        report = compute_basis(2, 7, strategy="extension")
        assert report.elements == B2
        assert not report.complete  # bound is 9, searched only to 7

    def test_strategies_agree(self):
        for t in (0, 1, 2):
            exhaustive = compute_basis(t, 6, strategy="exhaustive")
            extension = compute_basis(t, 6, strategy="extension")
            assert exhaustive == extension

    def test_element_lengths_within_bounds(self):
        for t in (0, 1):
            report = compute_basis(t, 3 * (t + 1))
            assert report.complete
            for perm in report.elements:
                assert t + 3 <= len(perm) <= 3 * (t + 1)

    def test_validation(self):
        with pytest.raises(ValueError):
            compute_basis(-1, 5)
        with pytest.raises(ValueError, match="allow_slow"):
            compute_basis(3, 11)
        with pytest.raises(ValueError):
            compute_basis(1, 13, allow_slow=True)
        with pytest.raises(ValueError):
            compute_basis(1, 6, strategy="magic")

    def test_json_serialization(self):
        payload = basis_report_json_dict(compute_basis(1, 6))
        assert payload["schema"] == "revpass.basis/1"
        assert payload["complete"] is True
        assert payload["elements"] == {"4": ["2413", "2431"], "5": ["23154"]}


class TestAvoidsAll:
    def test_reference_cases(self):
        assert not avoids_all((3, 5, 2, 4, 1), [(2, 3, 1)])
        assert avoids_all((3, 5, 2, 4, 1), [])

    def test_avoiding_b1_is_exactly_tier_at_most_1(self):
        for n in range(1, 8):
            for perm in enumerate_sn(n):
                assert avoids_all(perm, B1) == (rev_tier_by_pairs(perm)[0] <= 1)

    def test_avoiding_b2_is_exactly_tier_at_most_2(self):
        for n in range(1, 8):
            for perm in enumerate_sn(n):
                assert avoids_all(perm, B2) == (rev_tier_by_pairs(perm)[0] <= 2)


def _naive_split_contains(host, pattern, head_len, boundary):
    k = len(pattern)
    for positions in itertools.combinations(range(len(host)), k):
        if any(p >= boundary for p in positions[:head_len]):
            continue
        if any(p < boundary for p in positions[head_len:]):
            continue
        window = [host[p] for p in positions]
        if all(
            (window[i] < window[j]) == (pattern[i] < pattern[j])
            for i in range(k)
            for j in range(i + 1, k)
        ):
            return True
    return k == 0


class TestBoundaryContainment:
    def test_agrees_with_naive_scan(self):
        patterns = [
            p
            for m in range(0, 4)
            for p in itertools.permutations(range(1, m + 1))
        ]
        for n in range(0, 6):
            for host in enumerate_sn(n):
                for pattern in patterns:
                    for head_len in range(len(pattern) + 1):
                        for boundary in range(n + 1):
                            assert _contains_with_boundary(
                                host, pattern, head_len, boundary
                            ) == _naive_split_contains(
                                host, pattern, head_len, boundary
                            ), (host, pattern, head_len, boundary)

    def test_extension_filter_matches_direct_containment(self):
        # Inserting a new maximum at slot p introduces pattern b iff the
        # parent contains b-minus-max split around p.
        test_bases = [B1, ((4, 3, 2, 1), (4, 2, 1, 3)), ((2, 3, 1),)]
        for patterns in test_bases:
            reduced = [
                (b.index(len(b)), tuple(v for v in b if v != len(b)))
                for b in patterns
            ]
            for n in range(0, 6):
                for parent in enumerate_sn(n):
                    if not avoids_all(parent, patterns):
                        continue
                    for pos in range(n + 1):
                        candidate = parent[:pos] + (n + 1,) + parent[pos:]
                        direct = not avoids_all(candidate, patterns)
                        via_split = any(
                            _contains_with_boundary(parent, red, head, pos)
                            for head, red in reduced
                        )
                        assert direct == via_split, (candidate, patterns)


class TestEnumerateAv:
    def test_reference_counts(self):
        assert enumerate_av([(2, 3, 1)], 5) == (1, 2, 5, 14, 42)
        assert enumerate_av(B1, 8)[7] == 7584
        assert enumerate_av([(4, 3, 2, 1), (4, 2, 1, 3)], 7) == (
            1,
            2,
            6,
            22,
            89,
            380,
            1678,
        )

    def test_wilf_equivalence_small(self):
        assert enumerate_av([(4, 3, 2, 1), (4, 2, 1, 3)], 8) == enumerate_av(
            B1, 8
        )

    def test_empty_basis_counts_everything(self):
        import math

        assert enumerate_av([], 5) == tuple(
            math.factorial(n) for n in range(1, 6)
        )

    def test_single_point_pattern_blocks_everything(self):
        assert enumerate_av([(1,)], 4) == (0, 0, 0, 0)

    def test_counts_match_filtering(self):
        for patterns in (B1, ((3, 2, 1),), ((1, 2), (2, 1))):
            counts = enumerate_av(patterns, 6)
            for n in range(1, 7):
                direct = sum(
                    1 for p in enumerate_sn(n) if avoids_all(p, patterns)
                )
                assert counts[n - 1] == direct

    def test_validation(self):
        with pytest.raises(ValueError):
            enumerate_av([(2, 3, 1)], 12)
        with pytest.raises(ValueError):
            enumerate_av([(2, 3, 1)], 0)
