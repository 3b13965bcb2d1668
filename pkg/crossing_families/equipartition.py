"""Six-wedge equipartition of a planar point set by three concurrent lines."""
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from typing import Optional, Sequence

from tqdm import tqdm

from crossing_families.geom_core import (
    GeneralPositionMode,
    Point,
    PointSet,
    check_general_position,
    cross,
)
from crossing_families.utils.errors import (
    GeneralPositionViolationError,
    InvalidSizeError,
    OnBoundaryError,
    ResourceLimitError,
    SearchExhaustedError,
)

MAX_WEDGE_POINTS = 120
DIRECTION_TILT = Fraction(1, 1000)

ORIGIN = Point.of(0, 0)


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


@dataclass(frozen=True)
class Line:
    """Line a*x + b*y = c with integral coefficients in lowest terms, leading coefficient > 0."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        a, b, c = (Fraction(v) for v in (self.a, self.b, self.c))
        if a == 0 and b == 0:
            raise ValueError("a line needs (a, b) != (0, 0)")
        scale = math.lcm(a.denominator, b.denominator, c.denominator)
        a, b, c = (int(v * scale) for v in (a, b, c))
        divisor = math.gcd(a, b, c)
        sign = 1 if (a > 0 or (a == 0 and b > 0)) else -1
        object.__setattr__(self, "a", Fraction(sign * a // divisor))
        object.__setattr__(self, "b", Fraction(sign * b // divisor))
        object.__setattr__(self, "c", Fraction(sign * c // divisor))

    @classmethod
    def through(cls, point: Point, direction: Point) -> "Line":
        """Line through point along direction."""
        a, b = -direction.y, direction.x
        return cls(a, b, a * point.x + b * point.y)

    @property
    def direction(self) -> Point:
        return Point(self.b, -self.a)

    def evaluate(self, p: Point) -> Fraction:
        return self.a * p.x + self.b * p.y - self.c

    def side(self, p: Point) -> int:
        return _sign(self.evaluate(p))

    def distance_key(self, p: Point) -> Fraction:
        """Quantity monotone in the euclidean distance of p to the line."""
        return abs(self.evaluate(p))


def _angle_cmp(u: Point, v: Point) -> int:
    """Compare direction angles in [0, 2*pi) measured from +x."""

    def half(w: Point) -> int:
        return 0 if (w.y > 0 or (w.y == 0 and w.x > 0)) else 1

    if half(u) != half(v):
        return half(u) - half(v)
    return -_sign(cross(ORIGIN, u, v))


@dataclass(frozen=True)
class WedgePartition:
    """Apex, lines (L1, L2, L3) and the six wedges W1..W6 in counterclockwise order.

    W1 is the wedge containing the direction just counterclockwise of +x from the apex.
    L2 is the line not bounding W1, L1 the one not bounding W3 and L3 the one not bounding W5.
    """

    apex: Point
    lines: tuple[Line, Line, Line]
    wedges: tuple[tuple[Point, ...], ...]
    patterns: tuple[tuple[int, int, int], ...]

    @classmethod
    def from_directions(
        cls, apex: Point, directions: Sequence[Point], points: Sequence[Point] = ()
    ) -> "WedgePartition":
        rays = sorted(
            [d for d in directions] + [d.scale(-1) for d in directions], key=cmp_to_key(_angle_cmp)
        )
        first = rays[0]
        start = 0 if (first.y == 0 and first.x > 0) else len(rays) - 1
        rays = rays[start:] + rays[:start]
        lines = (
            Line.through(apex, rays[1]),
            Line.through(apex, rays[2]),
            Line.through(apex, rays[0]),
        )
        patterns = tuple(
            tuple(line.side(apex + rays[k] + rays[(k + 1) % 6]) for line in lines) for k in range(6)
        )
        partition = cls(apex, lines, tuple(() for _ in range(6)), patterns)
        buckets = [[] for _ in range(6)]
        for p in points:
            buckets[wedge_membership(p, partition) - 1].append(p)
        return cls(apex, lines, tuple(tuple(b) for b in buckets), patterns)

    @classmethod
    def from_lines(cls, apex: Point, lines: Sequence[Line], points: Sequence[Point] = ()):
        for line in lines:
            if line.evaluate(apex) != 0:
                raise ValueError(f"{line} does not pass through {apex}")
        return cls.from_directions(apex, [line.direction for line in lines], points)

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(len(w) for w in self.wedges)


def wedge_membership(p: Point, W: WedgePartition) -> int:
    """Index 1..6 of the wedge containing p, read off the sign pattern of the three lines."""
    pattern = tuple(line.side(p) for line in W.lines)
    if 0 in pattern:
        raise OnBoundaryError(f"{p} lies on a partition line")
    return W.patterns.index(pattern) + 1


def _candidate_directions(points: Sequence[Point]):
    yield Point.of(1, 0)
    yield Point.of(0, 1)
    for p, q in combinations(points, 2):
        d = q - p
        yield d + Point(-d.y, d.x).scale(DIRECTION_TILT)


def _halving_offset(points: Sequence[Point], normal: Point) -> Optional[Fraction]:
    """Offset c of a line normal.(x, y) = c with floor(n/2) points strictly below it."""
    values = sorted(normal.x * p.x + normal.y * p.y for p in points)
    k = len(values) // 2
    if values[k - 1] == values[k]:
        return None
    return (values[k - 1] + values[k]) / 2


def _apex_parameters(points: Sequence[Point], base: Point, direction: Point) -> list[Fraction]:
    """Apex positions base + t * direction, one per combinatorially distinct stretch of L1."""
    stops = set()
    for p, q in combinations(points, 2):
        denom = cross(ORIGIN, q - p, direction)
        if denom != 0:
            stops.add(-cross(ORIGIN, q - p, base - p) / denom)
    stops = sorted(stops)
    if not stops:
        return [Fraction(0)]
    middle = [(s + t) / 2 for s, t in zip(stops, stops[1:])]
    return [stops[0] - 1] + middle + [stops[-1] + 1]


def _split_directions(apex: Point, direction: Point, upper, lower, quota: int):
    """Directions of L2 and L3 through apex leaving >= quota points in each of the six wedges.

    Points below L1 are reflected through the apex so that every point is read as a
    direction in the open upper half-plane of L1; a wedge and its opposite then share
    one angular window.
    """
    rays = [(p - apex, 0) for p in upper] + [(apex - p, 1) for p in lower]

    def by_angle(u, v):
        return -_sign(cross(ORIGIN, u[0], v[0]))

    rays.sort(key=cmp_to_key(by_angle))
    for (u, _), (v, _) in zip(rays, rays[1:]):
        if cross(ORIGIN, u, v) == 0:
            return None

    counts = [0, 0]
    low = None
    for position, (_, tag) in enumerate(rays):
        counts[tag] += 1
        if min(counts) >= quota:
            low = position + 1
            break
    counts = [0, 0]
    high = None
    for position in range(len(rays) - 1, -1, -1):
        counts[rays[position][1]] += 1
        if min(counts) >= quota:
            high = position
            break
    if low is None or high is None or low >= high:
        return None
    middle = [tag for _, tag in rays[low:high]]
    if min(middle.count(0), middle.count(1)) < quota:
        return None
    alpha = rays[low - 1][0] + rays[low][0]
    beta = rays[high - 1][0] + rays[high][0]
    return alpha, beta


def six_wedge_partition(
    S: PointSet, cap: int = MAX_WEDGE_POINTS, progress: bool = False
) -> WedgePartition:
    """Three concurrent lines whose six wedges each hold at least floor(n/6) points.

    L1 is taken as a halving line of a candidate direction and the apex slides along it;
    for n = 6m the result has exactly m points per wedge. Candidates are tried in a fixed
    order and the first valid one is returned.

    Args:
        S: point set in strict general position, |S| >= 6
        cap: largest accepted |S|
        progress: show a progress bar over candidate directions

    Returns:
        WedgePartition with the points of S assigned to wedges
    """
    points = list(S.points)
    n = len(points)
    if n < 6:
        raise InvalidSizeError(f"six_wedge_partition needs at least 6 points, got {n}")
    if n > cap:
        raise ResourceLimitError("max_wedge_points", cap, n)
    if not check_general_position(points, GeneralPositionMode.STRICT):
        raise GeneralPositionViolationError("six_wedge_partition needs strict general position")
    quota = n // 6

    tried = 0
    directions = _candidate_directions(points)
    for direction in tqdm(directions, desc="Wedge directions", disable=not progress):
        tried += 1
        normal = Point(-direction.y, direction.x)
        offset = _halving_offset(points, normal)
        if offset is None:
            continue
        base = normal.scale(offset / (normal.x**2 + normal.y**2))
        upper = [p for p in points if normal.x * p.x + normal.y * p.y > offset]
        lower = [p for p in points if normal.x * p.x + normal.y * p.y < offset]
        for t in _apex_parameters(points, base, direction):
            apex = base + direction.scale(t)
            split = _split_directions(apex, direction, upper, lower, quota)
            if split is None:
                continue
            partition = WedgePartition.from_directions(apex, (direction,) + split, points)
            if min(partition.counts) >= quota:
                return partition
    raise SearchExhaustedError(
        f"no wedge partition found for n={n} after {tried} candidate directions"
    )
