"""Exact planar primitives and predicates."""
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence, Union

from crossing_families.utils.errors import DegenerateInputError, SharedVertexError

Rational = Union[int, str, Fraction]


def to_fraction(value: Rational) -> Fraction:
    """Parse an int, a decimal string or a "p/q" string into an exact Fraction.

    Usage:
        >>> to_fraction("3/4")
        Fraction(3, 4)
        >>> to_fraction("0.25")
        Fraction(1, 4)
    """
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact coordinates")
    return Fraction(value)


def fraction_to_str(value: Fraction) -> str:
    """Serialize a Fraction as "p/q" (or "p" when integral)."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True, order=True)
class Point:
    """Point with exact rational coordinates."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", to_fraction(self.x))
        object.__setattr__(self, "y", to_fraction(self.y))

    @classmethod
    def of(cls, x: Rational, y: Rational) -> "Point":
        """Build a point from ints, decimal strings or "p/q" strings."""
        return cls(to_fraction(x), to_fraction(y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scale(self, factor: Rational) -> "Point":
        factor = to_fraction(factor)
        return Point(self.x * factor, self.y * factor)

    def __repr__(self) -> str:
        return f"Point({fraction_to_str(self.x)}, {fraction_to_str(self.y)})"


class Orientation(int, Enum):
    """Sign of the turn p -> q -> r."""

    CCW = 1
    CW = -1
    COLLINEAR = 0


class GeneralPositionMode(str, Enum):
    """General position flavours."""

    STRICT = "strict"
    ORTHOGONAL = "orthogonal"


def cross(p: Point, q: Point, r: Point) -> Fraction:
    """Exact determinant (q - p) x (r - p)."""
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    """Orientation of the ordered triple (p, q, r).

    Usage:
        >>> orientation(Point.of(0, 0), Point.of(1, 0), Point.of(0, 1))
        <Orientation.CCW: 1>
    """
    det = cross(p, q, r)
    if det > 0:
        return Orientation.CCW
    if det < 0:
        return Orientation.CW
    return Orientation.COLLINEAR


def squared_distance(p: Point, q: Point) -> Fraction:
    return (p.x - q.x) ** 2 + (p.y - q.y) ** 2


@dataclass(frozen=True)
class Segment:
    """Closed straight segment between two distinct points."""

    a: Point
    b: Point

    def __post_init__(self):
        if self.a == self.b:
            raise DegenerateInputError(f"zero-length segment at {self.a}")

    @property
    def endpoints(self) -> frozenset:
        return frozenset((self.a, self.b))

    def side(self, p: Point) -> Orientation:
        """Side of the supporting line on which p lies."""
        return orientation(self.a, self.b, p)


def _open_overlap(s1: Segment, s2: Segment) -> bool:
    """Open overlap of two collinear segments."""
    if s1.a.x != s1.b.x:
        lo1, hi1 = sorted((s1.a.x, s1.b.x))
        lo2, hi2 = sorted((s2.a.x, s2.b.x))
    else:
        lo1, hi1 = sorted((s1.a.y, s1.b.y))
        lo2, hi2 = sorted((s2.a.y, s2.b.y))
    return max(lo1, lo2) < min(hi1, hi2)


def segments_cross(s1: Segment, s2: Segment) -> bool:
    """True iff the open segments share a point.

    Segments sharing an endpoint never cross.

    Args:
        s1: first segment
        s2: second segment

    Returns:
        whether the relative interiors intersect

    Usage:
        >>> segments_cross(
        ...     Segment(Point.of(0, 0), Point.of(2, 2)), Segment(Point.of(0, 2), Point.of(2, 0))
        ... )
        True
    """
    if s1.a == s1.b or s2.a == s2.b:
        raise DegenerateInputError("zero-length segment")
    if s1.endpoints & s2.endpoints:
        return False
    o1 = orientation(s1.a, s1.b, s2.a)
    o2 = orientation(s1.a, s1.b, s2.b)
    o3 = orientation(s2.a, s2.b, s1.a)
    o4 = orientation(s2.a, s2.b, s1.b)
    if o1 == o2 == o3 == o4 == Orientation.COLLINEAR:
        return _open_overlap(s1, s2)
    return o1 * o2 < 0 and o3 * o4 < 0


def segment_intersection_point(s1: Segment, s2: Segment) -> Optional[Point]:
    """Exact crossing point of two properly crossing segments, else None."""
    if not segments_cross(s1, s2):
        return None
    denom = cross(Point.of(0, 0), s1.b - s1.a, s2.b - s2.a)
    if denom == 0:
        return None
    t = cross(Point.of(0, 0), s2.a - s1.a, s2.b - s2.a) / denom
    return Point(s1.a.x + t * (s1.b.x - s1.a.x), s1.a.y + t * (s1.b.y - s1.a.y))


@dataclass(frozen=True)
class Elbow:
    """Orthogonal edge: a vertical leg at anchor_vertical, a horizontal leg at anchor_horizontal."""

    anchor_vertical: Point
    anchor_horizontal: Point

    def __post_init__(self):
        if (
            self.anchor_vertical.x == self.anchor_horizontal.x
            or self.anchor_vertical.y == self.anchor_horizontal.y
        ):
            raise DegenerateInputError(
                f"elbow {self.anchor_vertical} -> {self.anchor_horizontal} has a zero-length leg"
            )

    @property
    def corner(self) -> Point:
        return Point(self.anchor_vertical.x, self.anchor_horizontal.y)

    @property
    def legs(self) -> tuple[Segment, Segment]:
        return (
            Segment(self.anchor_vertical, self.corner),
            Segment(self.corner, self.anchor_horizontal),
        )

    @property
    def endpoints(self) -> frozenset:
        return frozenset((self.anchor_vertical, self.anchor_horizontal))


def elbows_cross(e1: Elbow, e2: Elbow) -> bool:
    """True iff some leg of e1 crosses some leg of e2 in the interior of both.

    Usage:
        >>> elbows_cross(
        ...     Elbow(Point.of(-1, -1), Point.of(10, 10)), Elbow(Point.of(-2, -2), Point.of(9, 9))
        ... )
        True
    """
    if e1.endpoints & e2.endpoints:
        raise SharedVertexError(f"elbows {e1} and {e2} share an endpoint")
    return any(segments_cross(l1, l2) for l1 in e1.legs for l2 in e2.legs)


@dataclass(frozen=True)
class PointSet:
    """Ordered set of pairwise distinct points with optional labels."""

    points: tuple[Point, ...]
    labels: Optional[tuple[str, ...]] = None
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != len(self.points):
                raise DegenerateInputError("one label per point required")
        index = {}
        for i, point in enumerate(self.points):
            if point in index:
                raise DegenerateInputError(f"duplicate point {point}")
            index[point] = i
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_coords(cls, coords: Iterable[tuple[Rational, Rational]], labels=None) -> "PointSet":
        return cls(tuple(Point.of(x, y) for x, y in coords), labels)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def index(self, point: Point) -> int:
        return self._index[point]

    def label(self, i: int) -> str:
        if self.labels is None:
            return str(i)
        return self.labels[i]

    def reflect_y(self) -> "PointSet":
        """Mirror across the x-axis."""
        return PointSet(tuple(Point(p.x, -p.y) for p in self.points), self.labels)


def check_general_position(S: Union[PointSet, Sequence[Point]], mode=GeneralPositionMode.STRICT):
    """Check strict (no three collinear) or orthogonal general position.

    Orthogonal mode additionally forbids shared x or y coordinates.
    """
    points = list(S)
    if len(set(points)) != len(points):
        return False
    mode = GeneralPositionMode(mode)
    if mode == GeneralPositionMode.ORTHOGONAL:
        xs = sorted(p.x for p in points)
        ys = sorted(p.y for p in points)
        if any(a == b for a, b in zip(xs, xs[1:])) or any(a == b for a, b in zip(ys, ys[1:])):
            return False
    return all(
        orientation(p, q, r) != Orientation.COLLINEAR for p, q, r in combinations(points, 3)
    )


def convex_hull(points: Iterable[Point]) -> list[Point]:
    """Strict convex hull in counterclockwise order (monotone chain)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def half(seq):
        chain = []
        for p in seq:
            while len(chain) >= 2 and cross(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


def in_convex_position(points: Sequence[Point]) -> bool:
    """All points are strict hull vertices."""
    points = list(points)
    if len(points) <= 2:
        return len(set(points)) == len(points)
    return len(convex_hull(points)) == len(points)


def cyclic_hull_order(points: Sequence[Point]) -> list[int]:
    """Indices of a convex-position sequence in counterclockwise hull order, starting at 0."""
    hull = convex_hull(points)
    position = {p: i for i, p in enumerate(points)}
    order = [position[p] for p in hull]
    start = order.index(0)
    return order[start:] + order[:start]


def rational_unit_vector(angle: float, max_denominator: int = 10**6) -> Point:
    """Exact point on the unit circle close to the given angle (tangent half-angle)."""
    if math.isclose(abs(angle), math.pi):
        return Point.of(-1, 0)
    t = Fraction(math.tan(angle / 2)).limit_denominator(max_denominator)
    denom = 1 + t * t
    return Point((1 - t * t) / denom, 2 * t / denom)


def rational_circle_points(n: int, radius: Rational = 1, center: Optional[Point] = None):
    """n exact points on a circle in counterclockwise order, strictly convex."""
    if n < 1:
        raise ValueError("need at least one point")
    center = center or Point.of(0, 0)
    radius = to_fraction(radius)
    return [
        center + rational_unit_vector(-math.pi + math.pi * (2 * k + 1) / n).scale(radius)
        for k in range(n)
    ]
