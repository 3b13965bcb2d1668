"""Tests for geometric graphs, families and Hamiltonian cycle counters."""
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from strategies import general_position_sets, points

from crossing_families.geom_core import Point, PointSet, Segment, segments_cross
from crossing_families.graphs import (
    Family,
    FamilyKind,
    GeomGraph,
    GraphKind,
    HamiltonianCycle,
    classify_edge_pairs,
    count_avoiding_pairs,
    count_crossings,
    crossing_table,
    edge_crossing_counts,
    graphs_cross,
    graphs_intersect,
    is_crossing_family,
    is_intersecting_family,
    max_crossings_bound,
    non_incident_pairs,
    same_side,
    triangle,
)
from crossing_families.utils.errors import (
    DegenerateInputError,
    InvalidSizeError,
    KindMismatchError,
    SharedVertexError,
)


def P(x, y):
    return Point.of(x, y)


def test_graph_kind_sizes():
    with pytest.raises(InvalidSizeError):
        GeomGraph(GraphKind.TRIANGLE, (P(0, 0), P(1, 0)))
    with pytest.raises(DegenerateInputError):
        GeomGraph(GraphKind.K_PATH, (P(0, 0), P(1, 0), P(0, 0)))


def test_cycle_edges_close_up():
    T = triangle(P(0, 0), P(4, 0), P(0, 4))
    assert len(T.edges) == 3
    path = GeomGraph(GraphKind.K_PATH, (P(0, 0), P(4, 0), P(0, 4)))
    assert len(path.edges) == 2


def test_graphs_cross_requires_vertex_disjoint():
    T1 = triangle(P(0, 0), P(4, 0), P(0, 4))
    T2 = triangle(P(0, 0), P(5, 5), P(-3, 2))
    with pytest.raises(SharedVertexError):
        graphs_cross(T1, T2)


def test_nested_triangles_do_not_cross():
    outer = triangle(P(0, 0), P(10, 0), P(0, 10))
    inner = triangle(P(1, 1), P(3, 1), P(1, 3))
    assert not graphs_cross(outer, inner)
    assert not is_crossing_family(Family((outer, inner), FamilyKind.CROSSING))


def test_star_of_david_crosses():
    up = triangle(P(0, 0), P(6, 0), P(3, 6))
    down = triangle(P(0, 4), P(6, 4), P(3, -2))
    assert graphs_cross(up, down)
    assert is_crossing_family(Family((up, down), FamilyKind.CROSSING))


def test_intersecting_family_may_share_vertices():
    T1 = triangle(P(0, 0), P(6, 0), P(3, 6))
    T2 = triangle(P(0, 0), P(6, 4), P(-1, 5))
    assert graphs_intersect(T1, T2)
    assert is_intersecting_family(Family((T1, T2), FamilyKind.INTERSECTING))


def test_intersecting_family_rejects_shared_edges():
    T1 = triangle(P(0, 0), P(6, 0), P(3, 6))
    T2 = triangle(P(0, 0), P(6, 0), P(3, -6))
    assert not is_intersecting_family(Family((T1, T2), FamilyKind.INTERSECTING))


def test_family_kind_mismatch():
    T1 = triangle(P(0, 0), P(6, 0), P(3, 6))
    with pytest.raises(KindMismatchError):
        is_crossing_family(Family((T1,), FamilyKind.INTERSECTING))


def test_mixing_elbows_and_segments_rejected():
    elbow = GeomGraph(GraphKind.ELBOW, (P(0, 0), P(3, 2)))
    edge = GeomGraph(GraphKind.MATCHING_EDGE, (P(1, -1), P(2, 5)))
    with pytest.raises(KindMismatchError):
        graphs_cross(elbow, edge)


def test_hamiltonian_cycle_rejects_non_permutation():
    with pytest.raises(DegenerateInputError):
        HamiltonianCycle((0, 1, 1))


def test_pentagram_crossings(convex_pentagon):
    C = HamiltonianCycle((0, 2, 4, 1, 3))
    assert count_crossings(convex_pentagon, C) == 5
    assert edge_crossing_counts(convex_pentagon, C) == [2] * 5
    assert count_avoiding_pairs(convex_pentagon, C) == 0


def test_convex_polygon_has_no_crossings(convex_hexagon):
    C = HamiltonianCycle(tuple(range(6)))
    counts = classify_edge_pairs(convex_hexagon, C)
    assert counts.crossing == 0
    assert counts.avoiding == non_incident_pairs(6)
    assert counts.incident == 6


def test_max_crossings_bound_values():
    assert max_crossings_bound(3) == 0
    assert max_crossings_bound(5) == 5
    assert max_crossings_bound(6) == 7
    assert max_crossings_bound(7) == 14
    assert max_crossings_bound(8) == 17


def test_same_side():
    s = Segment(P(0, 0), P(4, 0))
    assert same_side(s, P(1, 1), P(7, 3))
    assert not same_side(s, P(1, 1), P(1, -1))
    assert not same_side(s, P(9, 0), P(9, 0))


def test_crossing_table_on_pentagon(convex_pentagon):
    table = crossing_table(convex_pentagon)
    assert table.shape == (5, 5, 5, 5)
    assert table[0, 2, 1, 3] and table[3, 1, 2, 0]
    assert not table[0, 1, 2, 3]
    assert not table[0, 2, 2, 4]
    assert table.sum() == 8 * 5


def test_crossing_table_with_collinear_points():
    S = PointSet.from_coords([(0, 0), (2, 0), (4, 0), (1, 1), (1, -1), (3, 1)])
    table = crossing_table(S)
    assert table[0, 2, 3, 4]
    assert not table[0, 1, 1, 2]
    assert not table[0, 2, 1, 5]


class TestCrossingTableProperties:
    """The crossing table agrees with the segment predicate."""

    @given(S=st.lists(points, min_size=4, max_size=7, unique=True).map(tuple).map(PointSet))
    @settings(max_examples=60, deadline=None)
    def test_matches_segments_cross(self, S):
        """Collinear triples are allowed and fall back to the exact predicate."""
        table = crossing_table(S)
        for (i, j), (u, v) in combinations(combinations(range(len(S)), 2), 2):
            expected = segments_cross(Segment(S[i], S[j]), Segment(S[u], S[v]))
            assert table[i, j, u, v] == table[v, u, j, i] == expected


class TestCycleCounterProperties:
    """Counting identities for Hamiltonian cycles on random point sets."""

    @given(S=general_position_sets(min_size=4, max_size=8), data=st.data())
    @settings(max_examples=60, deadline=None)
    def test_edge_pair_classification_sums(self, S, data):
        """Every unordered edge pair is exactly one of crossing, avoiding or incident."""
        n = len(S)
        order = data.draw(st.permutations(range(n)))
        counts = classify_edge_pairs(S, HamiltonianCycle(tuple(order)))
        assert counts.crossing + counts.avoiding + counts.incident == n * (n - 1) // 2
        assert counts.incident == n
        assert counts.non_incident == non_incident_pairs(n)

    @given(S=general_position_sets(min_size=4, max_size=8), data=st.data())
    @settings(max_examples=60, deadline=None)
    def test_crossings_respect_bound(self, S, data):
        """No cycle exceeds the maximum number of crossings for its size."""
        order = data.draw(st.permutations(range(len(S))))
        C = HamiltonianCycle(tuple(order))
        crossings = count_crossings(S, C)
        assert crossings <= max_crossings_bound(len(S))
        assert sum(edge_crossing_counts(S, C)) == 2 * crossings

    @given(S=general_position_sets(min_size=4, max_size=7), data=st.data())
    @settings(max_examples=40, deadline=None)
    def test_relabelling_preserves_crossings(self, S, data):
        """Reversing or rotating the cycle keeps its crossing count."""
        order = tuple(data.draw(st.permutations(range(len(S)))))
        C = HamiltonianCycle(order)
        rotated = HamiltonianCycle(order[1:] + order[:1])
        reversed_cycle = HamiltonianCycle(order[::-1])
        assert count_crossings(S, C) == count_crossings(S, rotated)
        assert count_crossings(S, C) == count_crossings(S, reversed_cycle)


def test_segments_require_matching_size():
    S = PointSet.from_coords([(0, 0), (1, 0), (0, 1)])
    with pytest.raises(InvalidSizeError):
        HamiltonianCycle((0, 1, 2, 3)).segments(S)
