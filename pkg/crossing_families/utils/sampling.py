"""Seeded random point sets with integer coordinates."""
import numpy as np

from crossing_families.geom_core import Point, PointSet, orientation, rational_circle_points
from crossing_families.utils.errors import InvalidSizeError, SearchExhaustedError

MAX_ATTEMPTS = 10_000


def _fits(candidate: Point, accepted: list[Point], orthogonal: bool) -> bool:
    if candidate in accepted:
        return False
    if orthogonal and any(p.x == candidate.x or p.y == candidate.y for p in accepted):
        return False
    return all(
        orientation(p, q, candidate) != 0
        for i, p in enumerate(accepted)
        for q in accepted[i + 1 :]
    )


def _sample(n: int, seed: int, orthogonal: bool) -> PointSet:
    if n < 1:
        raise InvalidSizeError(f"n={n} < 1")
    rng = np.random.default_rng(seed)
    bound = 10 * n * n
    accepted: list[Point] = []
    for _ in range(MAX_ATTEMPTS):
        x, y = rng.integers(-bound, bound, size=2, endpoint=True)
        candidate = Point(int(x), int(y))
        if _fits(candidate, accepted, orthogonal):
            accepted.append(candidate)
            if len(accepted) == n:
                return PointSet(tuple(accepted))
    raise SearchExhaustedError(f"could not place {n} points after {MAX_ATTEMPTS} draws")


def random_general_position(n: int, seed: int = 0) -> PointSet:
    """n integer points, no three collinear."""
    return _sample(n, seed, orthogonal=False)


def random_orthogonal_general_position(n: int, seed: int = 0) -> PointSet:
    """n integer points, no three collinear and no repeated x or y coordinate."""
    return _sample(n, seed, orthogonal=True)


def random_convex_position(n: int, seed: int = 0) -> PointSet:
    """n exact points on the unit circle at random rational positions, in counterclockwise order."""
    if n < 1:
        raise InvalidSizeError(f"n={n} < 1")
    rng = np.random.default_rng(seed)
    slots = 4 * n
    chosen = np.sort(rng.choice(slots, size=n, replace=False))
    circle = rational_circle_points(slots)
    return PointSet(tuple(circle[int(k)] for k in chosen))


def hexagon_like(m: int, seed: int = 0) -> PointSet:
    """6m points in m clusters around each vertex of a regular hexagon, no three collinear."""
    if m < 1:
        raise InvalidSizeError(f"m={m} < 1")
    rng = np.random.default_rng(seed)
    scale = 1000 * m
    corners = rational_circle_points(6, radius=scale)
    accepted: list[Point] = []
    for corner in corners:
        target = len(accepted) + m
        for _ in range(MAX_ATTEMPTS):
            dx, dy = rng.integers(-scale // 10, scale // 10, size=2, endpoint=True)
            candidate = Point(round(corner.x) + int(dx), round(corner.y) + int(dy))
            if _fits(candidate, accepted, orthogonal=False):
                accepted.append(candidate)
                if len(accepted) == target:
                    break
        else:
            raise SearchExhaustedError(
                f"could not place {m} points near {corner} after {MAX_ATTEMPTS} draws"
            )
    return PointSet(tuple(accepted))
