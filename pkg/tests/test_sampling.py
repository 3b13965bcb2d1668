"""Tests for seeded random point sets."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crossing_families.geom_core import (
    GeneralPositionMode,
    check_general_position,
    in_convex_position,
)
from crossing_families.utils import sampling
from crossing_families.utils.errors import InvalidSizeError, SearchExhaustedError
from crossing_families.utils.sampling import (
    hexagon_like,
    random_convex_position,
    random_general_position,
    random_orthogonal_general_position,
)


class TestSamplingProperties:
    """Samplers return the requested size and position guarantees."""

    @given(n=st.integers(min_value=1, max_value=30), seed=st.integers(0, 2**32 - 1))
    @settings(max_examples=50, deadline=None)
    def test_general_position(self, n, seed):
        """No three sampled points are collinear."""
        S = random_general_position(n, seed=seed)
        assert len(S) == n
        assert check_general_position(S)

    @given(n=st.integers(min_value=1, max_value=30), seed=st.integers(0, 2**32 - 1))
    @settings(max_examples=50, deadline=None)
    def test_orthogonal_general_position(self, n, seed):
        """Sampled points never share a coordinate."""
        S = random_orthogonal_general_position(n, seed=seed)
        assert check_general_position(S, GeneralPositionMode.ORTHOGONAL)

    @given(n=st.integers(min_value=3, max_value=20), seed=st.integers(0, 2**32 - 1))
    @settings(max_examples=50, deadline=None)
    def test_convex_position(self, n, seed):
        """Circle samples are in convex position."""
        assert in_convex_position(random_convex_position(n, seed=seed).points)


def test_same_seed_same_points():
    assert random_general_position(10, seed=3) == random_general_position(10, seed=3)
    assert random_general_position(10, seed=3) != random_general_position(10, seed=4)


def test_hexagon_like():
    S = hexagon_like(2, seed=1)
    assert len(S) == 12
    assert check_general_position(S)


def test_hexagon_like_gives_up_after_max_attempts(monkeypatch):
    monkeypatch.setattr(sampling, "MAX_ATTEMPTS", 0)
    with pytest.raises(SearchExhaustedError):
        hexagon_like(1)


def test_sizes_validated():
    with pytest.raises(InvalidSizeError):
        random_general_position(0)
    with pytest.raises(InvalidSizeError):
        random_convex_position(0)
    with pytest.raises(InvalidSizeError):
        hexagon_like(0)
