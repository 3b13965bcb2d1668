"""Tests for the brute-force oracles."""
from itertools import combinations

import pytest
from hypothesis import given, settings
from strategies import general_position_sets

from crossing_families.constructions import (
    blades_pointset,
    crossing_triangles_grid,
    elbow_hard_pointset,
    ham_cycle_max_even,
    ham_cycle_max_odd,
    three_ray_pointset,
    two_path,
    triangle_edge_labels,
)
from crossing_families.geom_core import (
    Point,
    PointSet,
    in_convex_position,
    rational_circle_points,
)
from crossing_families.graphs import (
    Family,
    FamilyKind,
    GeomGraph,
    GraphKind,
    count_crossings,
    max_crossings_bound,
    triangle,
)
from crossing_families.oracles import (
    Disjointness,
    MatchingMode,
    antichain_upper_bound,
    best_2path_removal,
    build_crossing_graph,
    enumerate_hamiltonian_max_crossings,
    iter_cycle_crossings,
    grid_chain_partition,
    longest_perfect_matching_bruteforce,
    max_antichain_3d,
    max_crossing_elbows,
    max_crossing_subfamily,
    max_transversal_triangles,
    min_avoiding_pairs,
    two_path_family_max_edge_clique,
)
from crossing_families.utils.errors import (
    InvalidSizeError,
    KindMismatchError,
    ResourceLimitError,
)
from crossing_families.utils.sampling import random_general_position


def test_crossing_graph_matches_pairs():
    members = crossing_triangles_grid(2).family.members
    graph = build_crossing_graph(members, Disjointness.VERTEX)
    assert graph.adjacency.shape == (8, 8)
    assert graph.adjacency.sum() == 8 * 7
    assert graph.to_networkx().number_of_edges() == 28


def test_max_subfamily_of_grid():
    result = max_crossing_subfamily(crossing_triangles_grid(2).family.members)
    assert result.size == 8
    assert result.witness == tuple(range(8))


def test_max_subfamily_empty_and_capped():
    assert max_crossing_subfamily([]).size == 0
    members = crossing_triangles_grid(2).family.members
    with pytest.raises(ResourceLimitError):
        max_crossing_subfamily(members, cap=4)


def test_max_subfamily_skips_nested_member():
    outer = triangle(Point.of(0, 0), Point.of(10, 0), Point.of(0, 10))
    inner = triangle(Point.of(1, 1), Point.of(3, 1), Point.of(1, 3))
    crossing = triangle(Point.of(2, -1), Point.of(9, 5), Point.of(-1, 6))
    result = max_crossing_subfamily([outer, inner, crossing])
    assert result.size == 2


@pytest.mark.parametrize("n,expected", [(4, 1), (5, 5), (6, 7), (7, 14)])
def test_hamiltonian_max_on_convex_sets(n, expected):
    S = PointSet(tuple(rational_circle_points(n)))
    result = enumerate_hamiltonian_max_crossings(S)
    assert result.value == expected == max_crossings_bound(n)
    assert count_crossings(S, result.witness) == expected


@pytest.mark.parametrize("n", [4, 6, pytest.param(8, marks=pytest.mark.slow)])
def test_hamiltonian_bounds_on_random_sets(n):
    for seed in range(5):
        S = random_general_position(n, seed=seed)
        assert enumerate_hamiltonian_max_crossings(S).value <= max_crossings_bound(n)
        assert min_avoiding_pairs(S) >= n // 2 - 1


@pytest.mark.parametrize("m", [2, 3, pytest.param(4, marks=pytest.mark.slow)])
def test_hamiltonian_max_reached_by_even_construction(m):
    S = ham_cycle_max_even(m).S
    assert enumerate_hamiltonian_max_crossings(S).value == max_crossings_bound(2 * m)


def test_hamiltonian_max_agrees_with_constructions():
    odd = ham_cycle_max_odd(2)
    assert enumerate_hamiltonian_max_crossings(odd.S).value == 5
    even = ham_cycle_max_even(3)
    assert enumerate_hamiltonian_max_crossings(even.S).value == 7


def test_cycle_enumeration_count_and_order():
    S = PointSet(tuple(rational_circle_points(6)))
    orders = [order for order, _ in iter_cycle_crossings(S)]
    assert len(orders) == 60
    assert orders == sorted(orders)
    assert all(order[0] == 0 and order[1] < order[-1] for order in orders)


def test_hamiltonian_enumeration_bounds():
    with pytest.raises(InvalidSizeError):
        enumerate_hamiltonian_max_crossings(PointSet.from_coords([(0, 0), (1, 0), (0, 1)]))
    S = PointSet(tuple(rational_circle_points(9)))
    with pytest.raises(ResourceLimitError):
        enumerate_hamiltonian_max_crossings(S, cap=8)


def test_min_avoiding_pairs_convex():
    assert min_avoiding_pairs(PointSet(tuple(rational_circle_points(6)))) == 2
    assert min_avoiding_pairs(PointSet(tuple(rational_circle_points(8)))) == 3


def test_min_avoiding_pairs_needs_even_size():
    with pytest.raises(InvalidSizeError):
        min_avoiding_pairs(PointSet(tuple(rational_circle_points(5))))


class TestHamiltonianOracleProperties:
    """Oracle values on random small point sets."""

    @given(S=general_position_sets(min_size=4, max_size=7))
    @settings(max_examples=20, deadline=None)
    def test_maximum_respects_bound(self, S):
        """The exact maximum never exceeds the convex-position bound."""
        result = enumerate_hamiltonian_max_crossings(S)
        assert 0 <= result.value <= max_crossings_bound(len(S))
        assert count_crossings(S, result.witness) == result.value

    @given(S=general_position_sets(min_size=4, max_size=4))
    @settings(max_examples=30, deadline=None)
    def test_four_points_avoiding_pairs(self, S):
        """Four points in convex position leave one avoiding pair, otherwise both pairs avoid."""
        assert min_avoiding_pairs(S) == (1 if in_convex_position(list(S)) else 2)

    @given(S=general_position_sets(min_size=6, max_size=6))
    @settings(max_examples=10, deadline=None)
    def test_even_sets_keep_avoiding_pairs(self, S):
        """Even point sets always leave at least n/2 - 1 avoiding pairs."""
        assert min_avoiding_pairs(S) >= 2


def test_longest_matching_general_mode():
    S = PointSet(tuple(rational_circle_points(6)))
    result = longest_perfect_matching_bruteforce(S, MatchingMode.GENERAL)
    assert result.pairs == ((0, 3), (1, 4), (2, 5))
    assert not result.is_crossing_free


def test_longest_matching_caps():
    S = PointSet(tuple(rational_circle_points(6)))
    with pytest.raises(ResourceLimitError):
        longest_perfect_matching_bruteforce(
            S, MatchingMode.GENERAL, caps={"max_general_matching_points": 4}
        )
    with pytest.raises(InvalidSizeError):
        longest_perfect_matching_bruteforce(
            PointSet(tuple(rational_circle_points(5))), MatchingMode.GENERAL
        )


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 3), (3, 7), (4, 12)])
def test_max_antichain_3d(n, expected):
    assert max_antichain_3d(n) == expected == antichain_upper_bound(n)


@pytest.mark.slow
@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_max_antichain_matches_bound(n):
    assert max_antichain_3d(n) == antichain_upper_bound(n) == (3 * n * n + 3) // 4


def test_max_antichain_cap():
    with pytest.raises(ResourceLimitError):
        max_antichain_3d(5, cap=4)


@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_grid_chain_partition(n):
    chains = grid_chain_partition(n)
    cells = [cell for chain in chains for cell in chain]
    assert sorted(cells) == [(x, y) for x in range(1, n + 1) for y in range(1, n + 1)]
    assert [len(chain) for chain in chains] == list(range(2 * n - 1, 0, -2))
    for chain in chains:
        for p, q in combinations(chain, 2):
            assert (p[0] <= q[0] and p[1] <= q[1]) or (q[0] <= p[0] and q[1] <= p[1])


def test_best_2path_removal_on_grid():
    result = best_2path_removal(crossing_triangles_grid(2).family)
    assert 0 < result.size < 8
    assert len(result.assignment) == 8


@pytest.mark.slow
def test_best_2path_removal_modes_agree():
    family = crossing_triangles_grid(2).family
    assert (
        best_2path_removal(family).size == best_2path_removal(family, exhaustive=True).size
    )


def test_best_2path_removal_rejects_non_triangles():
    path = GeomGraph(GraphKind.K_PATH, (Point.of(0, 0), Point.of(1, 2), Point.of(3, 1)))
    with pytest.raises(KindMismatchError):
        best_2path_removal(Family((path,), FamilyKind.CROSSING))


def _two_path(*coords):
    return GeomGraph(GraphKind.K_PATH, tuple(Point.of(x, y) for x, y in coords))


def test_pairwise_crossing_paths_without_three_crossing_edges():
    # every pair of paths crosses at its own point, so the edge crossings form a matching
    paths = [
        _two_path((2, -3), (-4, 6), (8, 9)),
        _two_path((-1, 3), (2, -6), (11, 3)),
        _two_path((7, -3), (10, 6), (1, 9)),
    ]
    assert two_path_family_max_edge_clique(paths) == 2
    assert max_crossing_subfamily(paths).size == 3


def test_two_path_edge_clique():
    members = crossing_triangles_grid(2).family.members
    paths = [two_path(T, triangle_edge_labels(T)["b"]) for T in members]
    assert two_path_family_max_edge_clique(paths) >= 2
    assert two_path_family_max_edge_clique([]) == 0


def test_single_triangle_keeps_one_path():
    T = triangle(Point.of(0, 0), Point.of(4, 0), Point.of(1, 3))
    assert best_2path_removal(Family((T,), FamilyKind.CROSSING)).size == 1


def test_elbow_hard_oracle():
    assert max_crossing_elbows(elbow_hard_pointset(1).S).size == 1
    assert max_crossing_elbows(elbow_hard_pointset(2).S).size == 2


@pytest.mark.slow
def test_elbow_hard_oracle_three():
    assert max_crossing_elbows(elbow_hard_pointset(3).S).size <= 3


def test_transversal_triangles_oracle():
    instance = three_ray_pointset(2)
    assert max_transversal_triangles(instance.S).size == 3


@pytest.mark.slow
def test_transversal_triangles_oracle_three():
    assert max_transversal_triangles(three_ray_pointset(3).S).size == 7


@pytest.mark.slow
def test_blades_bound_with_oracle():
    instance = blades_pointset(2)
    assert enumerate_hamiltonian_max_crossings(instance.S).value <= 10


@pytest.mark.slow
def test_blades_bound_with_oracle_three():
    instance = blades_pointset(3)
    result = enumerate_hamiltonian_max_crossings(instance.S)
    assert count_crossings(instance.S, instance.cycle) <= result.value <= 22
