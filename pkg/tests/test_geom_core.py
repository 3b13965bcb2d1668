"""Tests for exact predicates and point sets."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from strategies import general_position_sets, points

from crossing_families.geom_core import (
    Elbow,
    GeneralPositionMode,
    Orientation,
    Point,
    PointSet,
    Segment,
    check_general_position,
    convex_hull,
    cyclic_hull_order,
    elbows_cross,
    in_convex_position,
    orientation,
    rational_circle_points,
    segment_intersection_point,
    segments_cross,
    to_fraction,
)
from crossing_families.utils.errors import DegenerateInputError, SharedVertexError


def test_to_fraction_parses_strings():
    assert to_fraction("3/4") == Fraction(3, 4)
    assert to_fraction("0.25") == Fraction(1, 4)
    assert to_fraction(-7) == Fraction(-7)


def test_to_fraction_rejects_floats():
    with pytest.raises(TypeError):
        to_fraction(0.5)


def test_orientation_basic():
    o = Point.of(0, 0)
    assert orientation(o, Point.of(1, 0), Point.of(0, 1)) == Orientation.CCW
    assert orientation(o, Point.of(0, 1), Point.of(1, 0)) == Orientation.CW
    assert orientation(o, Point.of(1, 1), Point.of(2, 2)) == Orientation.COLLINEAR


def test_segments_cross_proper():
    s = Segment(Point.of(0, 0), Point.of(2, 2))
    t = Segment(Point.of(0, 2), Point.of(2, 0))
    assert segments_cross(s, t)
    assert segment_intersection_point(s, t) == Point.of(1, 1)


def test_segments_sharing_endpoint_do_not_cross():
    s = Segment(Point.of(0, 0), Point.of(2, 2))
    t = Segment(Point.of(0, 0), Point.of(2, 0))
    assert not segments_cross(s, t)


def test_touching_segments_do_not_cross():
    s = Segment(Point.of(0, 0), Point.of(2, 0))
    t = Segment(Point.of(1, 0), Point.of(1, 5))
    assert not segments_cross(s, t)
    assert segment_intersection_point(s, t) is None


def test_collinear_overlap_counts_as_crossing():
    s = Segment(Point.of(0, 0), Point.of(3, 0))
    t = Segment(Point.of(1, 0), Point.of(5, 0))
    assert segments_cross(s, t)
    assert not segments_cross(s, Segment(Point.of(4, 0), Point.of(5, 0)))


def test_zero_length_segment_rejected():
    with pytest.raises(DegenerateInputError):
        Segment(Point.of(1, 1), Point.of(1, 1))


def test_elbow_geometry():
    e = Elbow(Point.of(0, 0), Point.of(3, 2))
    assert e.corner == Point.of(0, 2)
    vertical, horizontal = e.legs
    assert vertical.a.x == vertical.b.x
    assert horizontal.a.y == horizontal.b.y


def test_elbows_cross_example():
    e1 = Elbow(Point.of(-1, -1), Point.of(10, 10))
    e2 = Elbow(Point.of(-2, -2), Point.of(9, 9))
    assert elbows_cross(e1, e2)


def test_elbows_with_shared_endpoint_rejected():
    e1 = Elbow(Point.of(0, 0), Point.of(3, 2))
    e2 = Elbow(Point.of(0, 0), Point.of(5, 7))
    with pytest.raises(SharedVertexError):
        elbows_cross(e1, e2)


def test_degenerate_elbow_rejected():
    with pytest.raises(DegenerateInputError):
        Elbow(Point.of(0, 0), Point.of(0, 3))


def test_pointset_rejects_duplicates():
    with pytest.raises(DegenerateInputError):
        PointSet.from_coords([(0, 0), (1, 1), (0, 0)])


def test_pointset_labels_and_index():
    S = PointSet.from_coords([(0, 0), ("1/2", 3)], labels=["a", "b"])
    assert S.index(Point.of("1/2", 3)) == 1
    assert S.label(0) == "a"
    assert PointSet.from_coords([(0, 0)]).label(0) == "0"


def test_orthogonal_general_position():
    S = PointSet.from_coords([(0, 0), (1, 2), (2, 5)])
    assert check_general_position(S)
    assert check_general_position(S, GeneralPositionMode.ORTHOGONAL)
    T = PointSet.from_coords([(0, 0), (0, 2), (2, 5)])
    assert check_general_position(T)
    assert not check_general_position(T, GeneralPositionMode.ORTHOGONAL)


def test_rational_circle_points_convex():
    for n in (3, 5, 8, 13):
        pts = rational_circle_points(n)
        assert all(p.x**2 + p.y**2 == 1 for p in pts)
        assert in_convex_position(pts)
        assert cyclic_hull_order(pts) == list(range(n))


class TestPredicateProperties:
    """Invariants of the exact predicates on random inputs."""

    @given(p=points, q=points, r=points)
    @settings(max_examples=200)
    def test_orientation_antisymmetric(self, p, q, r):
        """Swapping two arguments flips the orientation."""
        assert orientation(p, q, r) == -orientation(q, p, r)
        assert orientation(p, q, r) == orientation(q, r, p)

    @given(S=general_position_sets(min_size=4, max_size=4))
    @settings(max_examples=100)
    def test_segments_cross_symmetric(self, S):
        """Crossing does not depend on argument or endpoint order."""
        a, b, c, d = S
        s, t = Segment(a, b), Segment(c, d)
        assert segments_cross(s, t) == segments_cross(t, s)
        assert segments_cross(s, t) == segments_cross(Segment(b, a), Segment(d, c))

    @given(S=general_position_sets(min_size=4, max_size=4))
    @settings(max_examples=100)
    def test_intersection_point_lies_on_both(self, S):
        """A crossing point is collinear with both segments."""
        a, b, c, d = S
        point = segment_intersection_point(Segment(a, b), Segment(c, d))
        if point is not None:
            assert orientation(a, b, point) == Orientation.COLLINEAR
            assert orientation(c, d, point) == Orientation.COLLINEAR

    @given(S=general_position_sets(min_size=4, max_size=4))
    @settings(max_examples=100)
    def test_convex_quadrilateral_has_crossing_diagonals(self, S):
        """Four points in convex position have exactly one crossing perfect matching."""
        a, b, c, d = S
        matchings = [((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))]
        crossings = sum(segments_cross(Segment(*e), Segment(*f)) for e, f in matchings)
        assert crossings == (1 if in_convex_position(list(S)) else 0)

    @given(S=general_position_sets(min_size=3, max_size=10))
    @settings(max_examples=100)
    def test_hull_vertices_are_input_points(self, S):
        """The hull is a convex subset of the input."""
        hull = convex_hull(S)
        assert set(hull) <= set(S)
        assert in_convex_position(hull)

    @given(S=general_position_sets(min_size=3, max_size=6))
    @settings(max_examples=50)
    def test_reflect_y_reverses_orientation(self, S):
        """Mirroring across the x-axis flips every orientation."""
        R = S.reflect_y()
        assert orientation(R[0], R[1], R[2]) == -orientation(S[0], S[1], S[2])
