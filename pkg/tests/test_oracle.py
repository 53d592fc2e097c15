import pytest
from hypothesis import given, strategies as st

from conftest import long_running
from rectcount import oracle
from rectcount.oracle import (
    Grid,
    SizeGuardError,
    allow_kl,
    allow_one_row,
    canonical_multiset,
    count_multisets,
    count_multisets_by_tilings,
    count_symmetric_multisets,
    enumerate_tilings,
    multisets,
)
from rectcount.partcore import euler_p
from rectcount.restrict2 import p_kl
from rectcount.tile2 import p2, p_tilde, s_count, t_count


def test_tiny_tilings():
    assert len(list(enumerate_tilings(1, 1))) == 1
    assert len(list(enumerate_tilings(1, 2))) == 2
    assert count_multisets(1, 2) == 2


def test_regression_tiling_count_2x2():
    # 2x2: one block, two horizontal dominoes, two vertical, four L-free mixes
    assert len(list(enumerate_tilings(2, 2))) == 8


def test_example_2x3():
    assert count_multisets(2, 3) == 10
    assert count_multisets_by_tilings(2, 3) == 10


def test_squares():
    assert [count_multisets(n, n) for n in range(1, 5)] == [1, 4, 21, 192]


def test_p2_rows():
    assert [count_multisets(2, n) for n in range(7)] == [1, 2, 4, 10, 22, 44, 91]
    assert all(count_multisets(2, n) == p2(n) for n in range(7))


def test_restricted_filters():
    for k in range(1, 4):
        for l in range(1, 4):
            for n in range(7):
                assert count_multisets(2, n, allow_kl(k, l)) == p_kl(k, l, n), (k, l, n)


def test_one_row_filter_is_p_tilde():
    for n in range(6):
        assert count_multisets(2, n, allow_one_row(range(1, 2 * n + 1))) == p_tilde(n)


def test_symmetric_variants():
    assert [count_symmetric_multisets(n, False) for n in range(4)] == [1, 1, 2, 4]
    assert [count_symmetric_multisets(n, True) for n in range(4)] == [1, 2, 4, 8]
    for n in range(7):
        assert count_symmetric_multisets(n, True) == t_count(n)
        assert count_symmetric_multisets(n, False) == s_count(n)


def test_canonical_multiset_examples():
    g = next(iter(enumerate_tilings(2, 3, lambda a, b: (a, b) == (2, 3))))
    assert canonical_multiset(g) == ((2, 3),)
    dominoes = [g for g in enumerate_tilings(2, 3, lambda a, b: (a, b) == (1, 2))
                if all(h == 2 for _, _, h, _ in g.rectangles())]
    assert canonical_multiset(dominoes[0]) == ((1, 2),) * 3
    g = next(iter(enumerate_tilings(2, 1, lambda a, b: (a, b) == (1, 2))))
    assert canonical_multiset(g) == ((1, 2),)


def test_size_guard():
    with pytest.raises(SizeGuardError):
        count_multisets(6, 6)
    with pytest.raises(SizeGuardError):
        count_multisets(6, 7, override=True)
    with pytest.raises(ValueError):
        count_multisets(-1, 2)


def test_parallel_matches_serial():
    assert multisets(3, 4, jobs=3) == multisets(3, 4)


def test_dump_format():
    g = next(iter(enumerate_tilings(1, 2)))
    assert isinstance(g.dump(), str) and len(g.dump().split()) == 2


@given(st.integers(1, 4), st.integers(1, 4))
def test_transpose_symmetry(m, n):
    assert count_multisets(m, n) == count_multisets(n, m)


@given(st.integers(0, 12))
def test_single_row_is_partition_count(n):
    assert count_multisets(1, n) == euler_p(n)


@given(st.integers(1, 3), st.integers(1, 5))
def test_every_tiling_well_formed(m, n):
    for g in enumerate_tilings(m, n):
        assert isinstance(g, Grid) and g.is_complete() and g.is_well_formed()
        assert sum(a * b for a, b in canonical_multiset(g)) == m * n


@given(st.integers(1, 3), st.integers(1, 4))
def test_tiling_stream_has_no_duplicates(m, n):
    grids = [tuple(g.cells) for g in enumerate_tilings(m, n)]
    assert len(grids) == len(set(grids))


@long_running
def test_square_five():
    assert count_multisets(5, 5, jobs=4) == 2035


@long_running
def test_three_row_data():
    assert [count_multisets(3, n) for n in range(1, 6)][:3] == [3, 10, 21]


def test_incomplete_grid_rejected():
    with pytest.raises(ValueError):
        canonical_multiset(Grid(1, 2, (0, -1)))
    assert not Grid(1, 2, (0, -1)).is_complete()
    assert not Grid(1, 3, (0, 1, 0)).is_well_formed()
