from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_partitions
from partition_identities.partitions import (
    CountTable,
    Partition,
    count_no_ones,
    count_smallest_at_least,
    count_smallest_exactly_once,
    count_table,
    enumerate_partitions,
    p,
    p_fixed_diff,
    p_fixed_diff_dp,
    partition_numbers,
)

FIVE = ["5", "4+1", "3+2", "3+1+1", "2+2+1", "2+1+1+1", "1+1+1+1+1"]
A6 = ["4+1+1", "3+3", "3+1+1+1", "2+2+2", "2+2+1+1", "2+1+1+1+1", "1+1+1+1+1+1"]


class TestPartition:
    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            Partition((2, 0))

    def test_canonicalize_and_parse(self):
        assert Partition.of([1, 4, 1]) == Partition.parse("4+1+1") == Partition((4, 1, 1))
        assert str(Partition((4, 1, 1))) == "4+1+1"

    def test_statistics(self):
        pi = Partition.parse("6+3+3+1+1")
        assert (pi.n, pi.largest, pi.smallest) == (14, 6, 1)
        assert pi.smallest_multiplicity() == 2
        assert pi.multiplicities() == Counter({3: 2, 1: 2, 6: 1})
        assert pi.difference() == 5


class TestEnumerate:
    def test_five_in_listed_order(self):
        assert [str(pi) for pi in enumerate_partitions(5)] == FIVE

    def test_one(self):
        assert list(enumerate_partitions(1)) == [Partition((1,))]

    def test_six_count(self):
        assert sum(1 for _ in enumerate_partitions(6)) == 11

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            list(enumerate_partitions(0))

    @pytest.mark.parametrize("n", [2, 7, 12, 18])
    def test_matches_recursive_oracle_including_order(self, n):
        assert [pi.parts for pi in enumerate_partitions(n)] == list(brute_partitions(n))

    def test_order_is_reverse_lexicographic(self):
        parts = [pi.parts for pi in enumerate_partitions(15)]
        assert parts == sorted(parts, reverse=True)
        assert len(set(parts)) == len(parts)

    def test_counts_match_recurrence_to_50(self):
        pn = partition_numbers(50)
        assert [sum(1 for _ in enumerate_partitions(n)) for n in range(1, 51)] == pn[1:]


class TestPartitionNumbers:
    def test_values(self):
        assert (p(0), p(5), p(6), p(7)) == (1, 7, 11, 15)

    def test_known_large(self):
        # Hardy and Ramanujan's classical value
        assert p(200) == 3972999029388

    def test_negative(self):
        with pytest.raises(ValueError):
            p(-1)


class TestSmallestPartCounts:
    def test_a6_members(self):
        got = [str(pi) for pi in enumerate_partitions(6) if pi.smallest_multiplicity() >= 2]
        assert got == A6
        assert count_smallest_at_least(6, 2) == 7

    def test_m1_is_p(self):
        assert [count_smallest_at_least(n, 1) for n in range(1, 51)] == partition_numbers(50)[1:]

    def test_a1(self):
        assert count_smallest_at_least(1, 2) == 0

    def test_c(self):
        assert count_smallest_exactly_once(5) == 4
        assert count_smallest_exactly_once(1) == 1
        assert count_smallest_exactly_once(6) == 11 - 7

    def test_d(self):
        assert count_no_ones(5) == 4
        assert count_no_ones(1) == 1
        assert count_no_ones(6) == 15 - 11

    def test_c_plus_a_is_p(self):
        pn = partition_numbers(50)
        for n in range(1, 51):
            assert count_smallest_exactly_once(n) + count_smallest_at_least(n, 2) == pn[n]

    @pytest.mark.parametrize("n", [1, 6, 13, 20])
    def test_against_oracle(self, n):
        brute = list(brute_partitions(n))
        for m in range(1, 7):
            assert count_smallest_at_least(n, m) == sum(1 for b in brute if b.count(b[-1]) >= m)
        assert count_no_ones(n) == sum(1 for b in brute_partitions(n + 1) if 1 not in b)

    @given(st.integers(1, 25))
    def test_non_increasing_in_m(self, n):
        col = [count_smallest_at_least(n, m) for m in range(1, n + 2)]
        assert all(x >= y for x, y in zip(col, col[1:]))
        assert col[-1] == 0

    def test_bad_args(self):
        with pytest.raises(ValueError):
            count_smallest_at_least(0, 2)
        with pytest.raises(ValueError):
            count_smallest_at_least(3, 0)


class TestFixedDifference:
    def test_examples(self):
        assert p_fixed_diff(6, 3) == 1
        assert p_fixed_diff(2, 1) == 0
        assert p_fixed_diff(12, 6) == 7

    def test_against_oracle(self):
        for n in (6, 12, 17):
            brute = list(brute_partitions(n))
            for t in range(n + 1):
                assert p_fixed_diff(n, t) == sum(1 for b in brute if b[0] - b[-1] == t)

    def test_sum_over_t_is_p(self):
        pn = partition_numbers(40)
        for n in range(1, 41):
            # one pass per n; the per-t filter is checked against the DP below
            hist = Counter(pi.difference() for pi in enumerate_partitions(n))
            assert sum(hist.values()) == pn[n]
            assert sum(p_fixed_diff_dp(n, t) for t in range(n + 1)) == pn[n]

    def test_dp_matches_filter(self):
        for n in range(1, 41):
            hist = Counter(pi.difference() for pi in enumerate_partitions(n))
            assert [p_fixed_diff_dp(n, t) for t in range(n + 1)] == [hist[t] for t in range(n + 1)]

    @pytest.mark.parametrize("n", range(1, 26))
    def test_dp_matches_p_fixed_diff_directly(self, n):
        for t in range(n + 1):
            assert p_fixed_diff_dp(n, t) == p_fixed_diff(n, t)


class TestCountTable:
    def test_n6(self):
        row = count_table(6)
        assert (row.p_n, row.a_n, row.c_n, row.d_n, row.p2n_n) == (11, 7, 4, 4, 7)
        assert row.a_m[1] == 11 and row.a_m[2] == 7

    def test_invariant_checked(self):
        with pytest.raises(ValueError):
            CountTable(n=6, p_n=11, a_n=7, c_n=5, d_n=4, p2n_n=7)
