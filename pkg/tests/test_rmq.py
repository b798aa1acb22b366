import numpy as np
import pytest
from hypothesis import given, strategies as st

from lccp import InputEmpty, RangeInvalid, SparseTableRMQ, build_rmq, range_min


def test_levels():
    rmq = build_rmq([3, 1, 4, 1, 5])
    assert rmq.levels[0].tolist() == [3, 1, 4, 1, 5]
    assert rmq.levels[1].tolist() == [1, 1, 1, 1]
    # minima of the two length-4 windows
    assert build_rmq([5, 4, 3, 2, 1]).levels[2].tolist() == [2, 1]


def test_singleton():
    rmq = build_rmq([7])
    assert range_min(rmq, 1, 1) == 7
    with pytest.raises(RangeInvalid):
        rmq.range_min(1, 2)


@pytest.mark.parametrize("x, y, expected", [(2, 4, 1), (1, 1, 3), (3, 5, 1)])
def test_range_min_examples(x, y, expected):
    assert range_min(build_rmq([3, 1, 4, 1, 5]), x, y) == expected


@pytest.mark.parametrize("x, y", [(0, 1), (3, 2), (1, 6)])
def test_invalid_range(x, y):
    with pytest.raises(RangeInvalid):
        build_rmq([3, 1, 4, 1, 5]).range_min(x, y)


def test_empty():
    with pytest.raises(InputEmpty):
        SparseTableRMQ([])


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=40))
def test_matches_scan_and_splits(a):
    rmq = build_rmq(a)
    m = len(a)
    for x in range(1, m + 1):
        for y in range(x, m + 1):
            value = rmq.range_min(x, y)
            assert value == min(a[x - 1 : y])
            for z in range(x, y):
                assert value == min(rmq.range_min(x, z), rmq.range_min(z + 1, y))


def test_level_recurrence():
    a = np.random.default_rng(3).integers(-9, 9, size=37)
    levels = build_rmq(a).levels
    for level in range(1, len(levels)):
        half = 1 << (level - 1)
        prev = levels[level - 1]
        assert np.array_equal(levels[level], np.minimum(prev[: len(levels[level])], prev[half : half + len(levels[level])]))
