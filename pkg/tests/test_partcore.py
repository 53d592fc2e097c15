from itertools import combinations_with_replacement

import pytest
from hypothesis import given, strategies as st

from rectcount.partcore import (
    Partition,
    SeqTable,
    convolve,
    euler_p,
    euler_p_table,
    nuclear_q,
    p_max_part,
    p_max_part_table,
    p_multiset,
    p_multiset_table,
    partitions_iter,
    two_colored_q2,
    two_colored_q2_table,
)

# well-known values of p(n)
KNOWN_P = {0: 1, 1: 1, 5: 7, 10: 42, 50: 204226, 100: 190569292, 200: 3972999029388}


@pytest.mark.parametrize("n,value", sorted(KNOWN_P.items()))
def test_euler_p_known(n, value):
    assert euler_p(n) == value


def test_euler_p_negative_is_zero():
    assert euler_p(-3) == 0


def test_euler_p_matches_enumeration():
    for n in range(16):
        assert euler_p(n) == sum(1 for _ in partitions_iter(n))


def test_table_prefix_stable():
    long = euler_p_table(300)
    assert euler_p_table(40) == long[:41]


def test_nuclear_values():
    assert [nuclear_q(n) for n in range(8)] == [1, 0, 1, 1, 2, 2, 4, 4]


def test_nuclear_counts_partitions_without_ones():
    for n in range(14):
        assert nuclear_q(n) == sum(1 for lam in partitions_iter(n) if 1 not in lam)


def test_multiset_semantics_repeat_parts():
    # A = {1, 1, 2}: the repeated 1 behaves like a second colour
    assert p_multiset_table(5, [1, 1, 2]) == [1, 2, 4, 6, 9, 12]
    assert p_multiset(100, [1, 2]) == 51


def test_p_max_part():
    assert p_max_part(10, 3) == 14
    assert p_max_part_table(12, 12) == euler_p_table(12)


def test_two_colored_methods_agree():
    assert two_colored_q2_table(120, "convolution") == two_colored_q2_table(120, "product")
    assert [two_colored_q2(n) for n in range(6)] == [1, 2, 5, 10, 20, 36]


def test_two_colored_bad_method():
    with pytest.raises(ValueError):
        two_colored_q2_table(5, "magic")


def test_partition_validation():
    assert Partition((3, 1, 1)).total == 5
    with pytest.raises(ValueError):
        Partition((1, 3))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_seqtable_key_and_access():
    t = SeqTable("p", {"n_max": 3}, [1, 1, 2, 3])
    assert t[3] == 3 and len(t) == 4
    assert t.key == ("p", (("n_max", "3"),))


def test_convolve_truncates():
    assert convolve([1, 1, 1], [1, 2]) == [1, 3]


@given(st.integers(0, 25), st.lists(st.integers(1, 6), min_size=1, max_size=4))
def test_multiset_count_matches_brute_force(n, parts):
    # count sub-multisets of the "coloured" parts summing to n
    def brute(total, idx):
        if idx == len(parts):
            return 1 if total == 0 else 0
        return sum(brute(total - c * parts[idx], idx + 1) for c in range(total // parts[idx] + 1))

    assert p_multiset(n, parts) == brute(n, 0)


@given(st.integers(0, 18))
def test_partitions_iter_is_exhaustive_and_ordered(n):
    seen = list(partitions_iter(n))
    assert len(seen) == len(set(seen)) == euler_p(n)
    for lam in seen:
        assert sum(lam) == n
        assert list(lam) == sorted(lam, reverse=True)


@given(st.integers(1, 400))
def test_nuclear_is_difference(n):
    assert nuclear_q(n) == euler_p(n) - euler_p(n - 1)


@given(st.integers(0, 12), st.integers(1, 5))
def test_max_part_counts_bounded_partitions(n, l):
    assert p_max_part(n, l) == sum(1 for lam in partitions_iter(n) if not lam or lam[0] <= l)


def test_multiset_all_small_parts():
    for n in range(10):
        combos = {tuple(sorted(c)) for k in range(n + 1) for c in combinations_with_replacement((1, 2, 3), k) if sum(c) == n}
        assert p_multiset(n, [1, 2, 3]) == len(combos)
