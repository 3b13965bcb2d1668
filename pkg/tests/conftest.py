"""Shared fixtures."""
import pytest

from crossing_families.geom_core import PointSet, rational_circle_points


@pytest.fixture
def convex_hexagon() -> PointSet:
    return PointSet(tuple(rational_circle_points(6)))


@pytest.fixture
def convex_pentagon() -> PointSet:
    return PointSet(tuple(rational_circle_points(5)))


@pytest.fixture
def config() -> dict:
    return {
        "caps": {
            "max_clique_graphs": 200,
            "max_ham_points": 10,
            "max_general_matching_points": 12,
            "max_bipartite_matching_m": 8,
            "max_antichain_n": 12,
            "max_removal_family": 12,
        },
        "precision": {"start_dps": 30, "max_dps": 480},
    }
