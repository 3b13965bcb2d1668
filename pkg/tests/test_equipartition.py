"""Tests for the six-wedge equipartition."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crossing_families.equipartition import (
    Line,
    WedgePartition,
    six_wedge_partition,
    wedge_membership,
)
from crossing_families.geom_core import Point, PointSet
from crossing_families.utils.errors import (
    GeneralPositionViolationError,
    InvalidSizeError,
    OnBoundaryError,
    ResourceLimitError,
)
from crossing_families.utils.sampling import random_general_position


def test_line_normalization():
    assert Line(2, 4, 6) == Line(1, 2, 3)
    assert Line(-1, 0, 5) == Line(1, 0, -5)
    line = Line.through(Point.of(1, 1), Point.of(1, 1))
    assert line.evaluate(Point.of(5, 5)) == 0
    assert line.side(Point.of(0, 1)) == -line.side(Point.of(1, 0))


def test_degenerate_line_rejected():
    with pytest.raises(ValueError):
        Line(0, 0, 1)


def test_axis_partition_numbering():
    origin = Point.of(0, 0)
    lines = [Line(1, 0, 0), Line(0, 1, 0), Line(1, -1, 0)]
    W = WedgePartition.from_lines(origin, lines)
    expected = {
        (2, 1): 1,
        (1, 2): 2,
        (-1, 1): 3,
        (-2, -1): 4,
        (-1, -2): 5,
        (1, -1): 6,
    }
    for (x, y), wedge in expected.items():
        assert wedge_membership(Point.of(x, y), W) == wedge


def test_point_on_line_is_rejected():
    W = WedgePartition.from_lines(Point.of(0, 0), [Line(1, 0, 0), Line(0, 1, 0), Line(1, -1, 0)])
    with pytest.raises(OnBoundaryError):
        wedge_membership(Point.of(3, 3), W)


def test_from_lines_requires_common_apex():
    with pytest.raises(ValueError):
        WedgePartition.from_lines(Point.of(0, 0), [Line(1, 0, 1), Line(0, 1, 0), Line(1, -1, 0)])


def test_too_few_points():
    with pytest.raises(InvalidSizeError):
        six_wedge_partition(random_general_position(5, seed=1))


def test_cap_enforced():
    with pytest.raises(ResourceLimitError):
        six_wedge_partition(random_general_position(12, seed=1), cap=6)


def test_collinear_input_rejected():
    S = PointSet.from_coords([(0, 0), (1, 1), (2, 2), (5, 0), (0, 7), (3, -4)])
    with pytest.raises(GeneralPositionViolationError):
        six_wedge_partition(S)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_exact_equipartition(m):
    S = random_general_position(6 * m, seed=m)
    W = six_wedge_partition(S)
    assert W.counts == (m,) * 6


class TestWedgePartitionProperties:
    """Invariants of six_wedge_partition on seeded random sets."""

    @given(n=st.integers(min_value=6, max_value=20), seed=st.integers(0, 10_000))
    @settings(max_examples=25, deadline=None)
    def test_every_wedge_meets_quota(self, n, seed):
        """Each wedge holds at least floor(n / 6) points and all points are assigned."""
        S = random_general_position(n, seed=seed)
        W = six_wedge_partition(S)
        assert min(W.counts) >= n // 6
        assert sum(W.counts) == n

    @given(n=st.integers(min_value=6, max_value=14), seed=st.integers(0, 10_000))
    @settings(max_examples=15, deadline=None)
    def test_buckets_agree_with_membership(self, n, seed):
        """The stored wedges match the sign-pattern lookup."""
        W = six_wedge_partition(random_general_position(n, seed=seed))
        for index, wedge in enumerate(W.wedges, start=1):
            for p in wedge:
                assert wedge_membership(p, W) == index
        assert all(line.evaluate(W.apex) == 0 for line in W.lines)
