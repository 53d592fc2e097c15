from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rectcount.partcore import euler_p
from rectcount.restrict2 import (
    RestrictSpec,
    closed_form_table1,
    growth_diagnostic,
    leading_coefficient,
    p_1l_table,
    p_k1,
    p_k1_table,
    p_kl,
    p_kl_convolution,
    p_kl_table,
    p_two_parts,
)
from rectcount.tile2 import p_tilde_filter


def test_small_rows():
    assert p_k1_table(1, 6) == [1] * 7
    assert p_k1_table(2, 6) == [n + 1 for n in range(7)]
    # every block fits a 2 x 3 strip, so p_{3,3}(2,3) = p(2,3)
    assert p_kl_table(3, 3, 3) == [1, 2, 4, 10]


def test_p_kl_negative_and_bad_bounds():
    assert p_kl(2, 2, -1) == 0
    with pytest.raises(ValueError):
        RestrictSpec(0, 1)


def test_closed_forms_match_to_60():
    for k in range(1, 4):
        for l in range(1, 4):
            for n in range(1, 61):
                assert p_kl(k, l, n) == closed_form_table1(k, l, n), (k, l, n)


def test_closed_form_domain():
    with pytest.raises(ValueError):
        closed_form_table1(4, 1, 5)
    with pytest.raises(ValueError):
        closed_form_table1(2, 2, 0)


def test_convolution_form():
    assert p_kl_convolution(3, 3, 12) == p_kl(3, 3, 12) == 293
    with pytest.raises(ValueError):
        p_kl_convolution(2, 1, 4)


def test_one_by_l_is_bounded_partitions():
    for l in range(1, 5):
        assert p_kl_table(1, l, 30) == p_1l_table(l, 30)


def test_two_parts():
    assert [p_two_parts(3, n) for n in range(7)] == [1, 1, 1, 3, 3, 3, 5]
    with pytest.raises(ValueError):
        p_two_parts(2, 4)


def test_leading_coefficient():
    assert leading_coefficient(3, 3) == Fraction(1, 216)
    assert leading_coefficient(2, 1) == 1


def test_growth_converges():
    report = growth_diagnostic(4, 2, 400)
    assert report.ok
    with pytest.raises(ValueError):
        growth_diagnostic(2, 2, 5)


@given(st.integers(1, 5), st.integers(2, 5), st.integers(0, 40))
def test_l_recursion(k, l, n):
    lhs = p_kl(k, l, n)
    assert lhs == p_kl(k, l, n - l) + p_kl(k, l - 1, n)
    assert lhs == p_kl_convolution(k, l, n)


@given(st.integers(1, 6), st.integers(0, 9))
def test_k1_matches_filter(k, n):
    assert p_k1(k, n) == p_tilde_filter(n, range(1, k + 1))


@given(st.integers(1, 4), st.integers(1, 4), st.integers(1, 60))
def test_monotone_in_k_and_l(k, l, n):
    assert p_kl(k, l, n) <= p_kl(k + 1, l, n)
    assert p_kl(k, l, n) <= p_kl(k, l + 1, n)
    assert p_kl(k, l, n) <= p_kl(k, l, n + 1)


@given(st.integers(2, 30))
def test_large_k_recovers_p_tilde_limit(n):
    # with every length allowed the one-row count is bounded by p(2n)
    assert p_k1(2 * n, n) <= euler_p(2 * n)
