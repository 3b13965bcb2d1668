"""Generators for the point sets and graph families of the crossing-family constructions.

Every generator returns an Instance: the point set, an optional family or Hamiltonian
cycle, and claims that the verifiers in `crossing_families.claims` can re-check.
"""
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations, product, zip_longest
from typing import Optional, Sequence

import numpy as np

from crossing_families.equipartition import MAX_WEDGE_POINTS, Line, six_wedge_partition
from crossing_families.geom_core import (
    GeneralPositionMode,
    Orientation,
    Point,
    PointSet,
    Segment,
    check_general_position,
    cyclic_hull_order,
    fraction_to_str,
    in_convex_position,
    orientation,
    rational_circle_points,
    rational_unit_vector,
    segments_cross,
)
from crossing_families.graphs import (
    Family,
    FamilyKind,
    GeomGraph,
    GraphKind,
    HamiltonianCycle,
    count_crossings,
    crossing_table,
    graphs_cross,
    same_side,
    triangle,
)
from crossing_families.utils.errors import (
    CertificationError,
    DegenerateLabelingError,
    GeneralPositionViolationError,
    InvalidSizeError,
    KindMismatchError,
    NotConvexPositionError,
    PartitionFailureError,
    ResourceLimitError,
    SeparationViolationError,
    SharedVertexError,
    TransversalNotConvexError,
)

MAX_GRID_TRIANGLES = 512
MAX_REMOVAL_FAMILY = 12
MAX_HAM_POINTS = 10
MAX_TRANSVERSAL_N = 3
MAX_BLADES_M = 20

EDGE_LABELS = ("l", "r", "b")

BLADE_ANGLES = {"a": math.pi / 2, "b": 7 * math.pi / 6, "c": 11 * math.pi / 6}
BLADE_BULGE = Fraction(1, 4)


class Relation(str, Enum):
    """How a computed value is compared with the claimed one."""

    EQ = "eq"
    LE = "le"
    GE = "ge"


@dataclass(frozen=True)
class Claim:
    """A checkable statement about an instance."""

    description: str
    verifier: str
    value: int
    relation: Relation = Relation.EQ

    def __post_init__(self):
        object.__setattr__(self, "relation", Relation(self.relation))

    def holds(self, computed: int) -> bool:
        if self.relation == Relation.LE:
            return computed <= self.value
        if self.relation == Relation.GE:
            return computed >= self.value
        return computed == self.value


@dataclass
class Instance:
    """Reproducible output of a construction."""

    name: str
    S: PointSet  # pylint: disable=invalid-name
    family: Optional[Family] = None
    cycle: Optional[HamiltonianCycle] = None
    claims: list[Claim] = field(default_factory=list)
    parameters: dict = field(default_factory=dict)


@dataclass(frozen=True)
class SeparatedSets:
    """Parts P_1..P_k, each strictly separated from the others by its line L_i."""

    parts: tuple[tuple[Point, ...], ...]
    lines: tuple[Line, ...]


def ceil_three_quarters_square(m: int) -> int:
    """ceil(3 m^2 / 4)."""
    return (3 * m * m + 3) // 4


def antichain_triples(m: int) -> list[tuple[int, int, int]]:
    """Triples in [m]^3 whose coordinates sum to ceil(3(m + 1) / 2)."""
    target = (3 * (m + 1) + 1) // 2
    return [t for t in product(range(1, m + 1), repeat=3) if sum(t) == target]


# elbows


def elbow_family(S: PointSet) -> Instance:
    """floor(n/4) mutually crossing elbows.

    A horizontal line L splits S in halves and a vertical line M sweeps from right to left
    until one of the two right-hand regions holds m = floor(n/4) points (region B). The
    region on the other side of L and left of M holds more than m points; the m rightmost
    of them form region A. Elbow i joins the i-th point of A (right to left) to the i-th
    point of B (moving away from L).
    """
    n = len(S)
    if n < 4:
        raise InvalidSizeError(f"elbow_family needs at least 4 points, got {n}")
    if not check_general_position(S, GeneralPositionMode.ORTHOGONAL):
        raise GeneralPositionViolationError("elbow_family needs orthogonal general position")
    m = n // 4
    upper = set(sorted(S.points, key=lambda p: p.y, reverse=True)[: n // 2])

    right_upper, right_lower = [], []
    stop_x = None
    for point in sorted(S.points, key=lambda p: p.x, reverse=True):
        (right_upper if point in upper else right_lower).append(point)
        if m in (len(right_upper), len(right_lower)):
            stop_x = point.x
            break

    # region B below L: mirror image of the case drawn with B above L
    mirrored = len(right_lower) == m
    region_b = right_lower if mirrored else right_upper
    region_a = [p for p in S.points if p.x < stop_x and (p in upper) == mirrored]
    anchors_a = sorted(region_a, key=lambda p: p.x, reverse=True)[:m]
    anchors_b = sorted(region_b, key=lambda p: p.y, reverse=not mirrored)

    members = tuple(
        GeomGraph(GraphKind.ELBOW, (a, b)) for a, b in zip(anchors_a, anchors_b)
    )
    return Instance(
        name="elbow-family",
        S=S,
        family=Family(members, FamilyKind.CROSSING),
        claims=[Claim(f"{m} vertex-disjoint mutually crossing elbows", "crossing_family", m)],
        parameters={"n": n, "m": m, "mirrored": mirrored},
    )


def elbow_hard_pointset(m: int) -> Instance:
    """3m points on three almost parallel lines of negative slope (groups a < b < c)."""
    if m < 1:
        raise InvalidSizeError(f"m={m} < 1")
    points, labels = [], []
    for group, name in enumerate("abc"):
        for i in range(1, m + 1):
            t = Fraction(i, 2 * m)
            points.append(Point(2 * group + t, 4 * group - t - t * t / (8 * m)))
            labels.append(f"{name}{i}")
    return Instance(
        name="elbow-hard",
        S=PointSet(tuple(points), tuple(labels)),
        claims=[
            Claim(
                f"no more than {m} mutually crossing elbows",
                "max_crossing_elbows",
                m,
                Relation.LE,
            )
        ],
        parameters={"m": m},
    )


def all_elbows(S: PointSet) -> list[GeomGraph]:
    """Every elbow on S, one per ordered pair (vertical anchor, horizontal anchor)."""
    return [
        GeomGraph(GraphKind.ELBOW, (p, q))
        for p in S.points
        for q in S.points
        if p.x != q.x and p.y != q.y
    ]


# triangles and 2-paths


def crossing_triangles_grid(m: int, cap: int = MAX_GRID_TRIANGLES) -> Instance:
    """m^3 mutually crossing triangles T_{i,j,k}.

    All triangles translate one base triangle with a horizontal top side and the apex
    below it. The first index shifts down-right by s, the second down-left by s^2 and the
    third up by s^3 with s = 1/(4m), so pairs differing first in i only cross at the right
    edge of the smaller one, first in j at its left edge and in k at its top edge.
    """
    if m < 1:
        raise InvalidSizeError(f"m={m} < 1")
    if m**3 > cap:
        raise ResourceLimitError("max_grid_triangles", cap, m**3)
    s = Fraction(1, 4 * m)
    steps = (Point(s, -s), Point(-(s**2), -(s**2)), Point(0, s**3))
    base = (Point.of(-1, 0), Point.of(1, 0), Point.of(0, -2))

    points, labels, members, index = [], [], [], []
    for ijk in product(range(1, m + 1), repeat=3):
        offset = Point.of(0, 0)
        for step, count in zip(steps, ijk):
            offset = offset + step.scale(count)
        vertices = tuple(v + offset for v in base)
        name = "T" + ".".join(str(c) for c in ijk)
        points.extend(vertices)
        labels.extend(f"{name}:{corner}" for corner in "LRB")
        members.append(triangle(*vertices))
        index.append(list(ijk))

    claims = [Claim(f"{m**3} mutually crossing triangles", "crossing_family", m**3)]
    if m**3 <= MAX_REMOVAL_FAMILY:
        claims.append(
            Claim(
                "after removing one edge per triangle at most 3m^2 paths mutually cross",
                "best_2path_removal",
                3 * m * m,
                Relation.LE,
            )
        )
    return Instance(
        name="triangle-grid",
        S=PointSet(tuple(points), tuple(labels)),
        family=Family(tuple(members), FamilyKind.CROSSING),
        claims=claims,
        parameters={"m": m, "index": index},
    )


def triangle_edge_labels(T: GeomGraph) -> dict[str, tuple[Point, Point]]:
    """Left, right and bottom edge of a triangle, read from its reference vertex.

    The reference vertex is the unique topmost vertex; when the top side is horizontal it
    is the vertex opposite that side. l and r join the reference vertex to its left and
    right neighbour, b is the opposite edge.
    """
    if T.kind != GraphKind.TRIANGLE:
        raise KindMismatchError(f"expected a triangle, got {T.kind.value}")
    top = max(v.y for v in T.vertices)
    highest = [v for v in T.vertices if v.y == top]
    if len(highest) == 1:
        apex, left_turn = highest[0], Orientation.CCW
    else:
        apex, left_turn = next(v for v in T.vertices if v.y != top), Orientation.CW
    u, w = (v for v in T.vertices if v != apex)
    if orientation(apex, u, w) != left_turn:
        u, w = w, u
    return {"l": (apex, u), "r": (apex, w), "b": (u, w)}


def two_path(T: GeomGraph, removed: tuple[Point, Point]) -> GeomGraph:
    """The 2-path left after deleting one edge of a triangle."""
    a, b = removed
    middle = next(v for v in T.vertices if v not in (a, b))
    return GeomGraph(GraphKind.K_PATH, (a, middle, b))


def label_triangle_pair(T_i: GeomGraph, T_j: GeomGraph) -> frozenset:
    """Labels x in {l, r, b} such that removing the x-edge of both triangles keeps a crossing."""
    for T in (T_i, T_j):
        if T.kind != GraphKind.TRIANGLE:
            raise KindMismatchError(f"expected a triangle, got {T.kind.value}")
    if set(T_i.vertices) & set(T_j.vertices):
        raise SharedVertexError("triangles share a vertex")
    if {v.y for v in T_i.vertices} & {v.y for v in T_j.vertices}:
        raise DegenerateLabelingError("vertices of the two triangles share a horizontal line")
    labels_i, labels_j = triangle_edge_labels(T_i), triangle_edge_labels(T_j)
    return frozenset(
        x
        for x in EDGE_LABELS
        if graphs_cross(two_path(T_i, labels_i[x]), two_path(T_j, labels_j[x]))
    )


# Hamiltonian cycles with many crossings


def _labelled(points: Sequence[Point], prefix: str = "p") -> PointSet:
    return PointSet(tuple(points), tuple(f"{prefix}{k}" for k in range(len(points))))


def ham_cycle_max_odd(m: int) -> Instance:
    """Star polygon on 2m + 1 convex points: point k is joined to k + m and k - m."""
    if m < 2:
        raise InvalidSizeError(f"m={m} < 2")
    n = 2 * m + 1
    value = n * (n - 3) // 2
    return Instance(
        name="ham-odd",
        S=_labelled(rational_circle_points(n)),
        cycle=HamiltonianCycle(tuple((i * m) % n for i in range(n))),
        claims=[Claim(f"cycle has n(n-3)/2 = {value} crossings", "cycle_crossings", value)],
        parameters={"m": m},
    )


@dataclass(frozen=True)
class EvenLevel:
    """One level of the even construction: points, cycle and the distinguished edge."""

    S: PointSet  # pylint: disable=invalid-name
    cycle: HamiltonianCycle
    distinguished: tuple[int, int]


def _insert_beside(circle: list[int], anchor: int, label: int, toward: int, away: int):
    """Insert label next to anchor on the arc of the circle that holds toward, not away."""
    start = circle.index(anchor)

    def ahead(x):
        return (circle.index(x) - start) % len(circle)

    if ahead(toward) < ahead(away):
        circle.insert(start + 1, label)
    else:
        circle.insert(start, label)


def _even_steps(m: int) -> tuple[list[int], list[tuple[list[int], tuple[int, int]]]]:
    """Circular order of the final labels and, per level, the cycle and distinguished edge."""
    circle = [0, 1, 2, 3]
    cycle = [0, 2, 1, 3]
    distinguished = (0, 2)
    levels = [(list(cycle), distinguished)]
    for _ in range(m - 2):
        u, v = distinguished
        n = len(cycle)
        if cycle[(cycle.index(u) + 1) % n] != v:
            cycle.reverse()
        start = cycle.index(u)
        cycle = cycle[start:] + cycle[:start]
        w, z = cycle[-1], cycle[2]
        p, q = n, n + 1
        _insert_beside(circle, u, p, toward=w, away=v)
        _insert_beside(circle, v, q, toward=z, away=u)
        cycle = [u, q, p] + cycle[1:]
        distinguished = (q, p)
        levels.append((list(cycle), distinguished))
    return circle, levels


def _check_even_level(level: EvenLevel):
    n = len(level.S)
    u, v = level.distinguished
    edge = Segment(level.S[u], level.S[v])
    crossed = sum(segments_cross(edge, s) for s in level.cycle.segments(level.S))
    if crossed != n - 3:
        raise CertificationError(f"distinguished edge crosses {crossed} edges, expected {n - 3}")
    order = level.cycle.order
    position = order.index(u)
    before, after = order[position - 1], order[(position + 2) % n]
    if order[(position + 1) % n] != v:
        before, after = order[(position + 1) % n], order[position - 2]
    if same_side(edge, level.S[before], level.S[after]):
        raise CertificationError("edges incident to the distinguished edge are on one side")
    total = count_crossings(level.S, level.cycle)
    if total != n * (n - 4) // 2 + 1:
        raise CertificationError(f"{total} crossings on {n} points")


def even_construction_levels(m: int) -> list[EvenLevel]:
    """Every level n = 4, 6, ..., 2m of the even construction, each certified exactly.

    Each step replaces the distinguished edge uv by u-q-p-v where p sits next to u and
    q next to v on the circle, on the sides of the other neighbours of u and v; qp becomes
    the new distinguished edge.
    """
    if m < 2:
        raise InvalidSizeError(f"m={m} < 2")
    circle, steps = _even_steps(m)
    placed = rational_circle_points(len(circle))
    coordinates = [None] * len(circle)
    for position, label in enumerate(circle):
        coordinates[label] = placed[position]

    levels = []
    for cycle, distinguished in steps:
        n = len(cycle)
        level = EvenLevel(
            _labelled(coordinates[:n]), HamiltonianCycle(tuple(cycle)), distinguished
        )
        _check_even_level(level)
        levels.append(level)
    return levels


def ham_cycle_max_even(m: int) -> Instance:
    """2m convex points and a cycle with n(n-4)/2 + 1 crossings."""
    level = even_construction_levels(m)[-1]
    n = 2 * m
    value = n * (n - 4) // 2 + 1
    return Instance(
        name="ham-even",
        S=level.S,
        cycle=level.cycle,
        claims=[
            Claim(f"cycle has n(n-4)/2 + 1 = {value} crossings", "cycle_crossings", value),
            Claim(
                f"distinguished edge crosses n - 3 = {n - 3} edges",
                "distinguished_edge_crossings",
                n - 3,
            ),
        ],
        parameters={"m": m, "distinguished_edge": list(level.distinguished)},
    )


def edge_crossings_with_cycle(S: PointSet, C: HamiltonianCycle, edge: tuple[int, int]) -> int:
    """Number of cycle edges crossed by the segment between two points of S."""
    segment = Segment(S[edge[0]], S[edge[1]])
    return sum(segments_cross(segment, s) for s in C.segments(S))


# blades


@dataclass(frozen=True)
class BladeEdgeCounts:
    """Cycle edges per blade pair: a=AA, b=BB, c=CC, d=AB, e=BC, f=CA."""

    a: int
    b: int
    c: int
    d: int
    e: int
    f: int


def _blade_class(x: str, y: str) -> str:
    """Edges AA, AB belong to class a; BB, BC to b; CC, CA to c."""
    if x == y:
        return x
    return {frozenset("ab"): "a", frozenset("bc"): "b", frozenset("ca"): "c"}[frozenset(x + y)]


def blades_pointset(m: int, cap: int = MAX_BLADES_M) -> Instance:
    """3m points on three short convex arcs ("blades") pointing away from the origin.

    Blade x runs radially outwards and bulges towards the blade preceding it in
    counterclockwise order, so an edge of class x (inside blade x, or from x to the next
    blade) can only cross edges of the same class.
    """
    if m < 2:
        raise InvalidSizeError(f"m={m} < 2")
    if m > cap:
        raise ResourceLimitError("max_blades_m", cap, m)
    points, labels = [], []
    for name, angle in BLADE_ANGLES.items():
        direction = rational_unit_vector(angle)
        bulge = Point(direction.y, -direction.x)
        for i in range(1, m + 1):
            t = Fraction(i, m + 1)
            points.append(direction.scale(4 + t) + bulge.scale(BLADE_BULGE * t * (1 - t)))
            labels.append(f"{name}{i}")
    S = PointSet(tuple(points), tuple(labels))
    cycle = blades_candidate_cycle(S)
    crossings = count_crossings(S, cycle)
    claims = [
        Claim(f"candidate cycle has {crossings} crossings", "cycle_crossings", crossings),
        Claim("only edges of the same class cross", "blade_separation", 1),
    ]
    if 3 * m <= MAX_HAM_POINTS:
        claims.append(
            Claim(
                "no Hamiltonian cycle exceeds floor(5m^2/2) crossings",
                "hamiltonian_max_crossings",
                5 * m * m // 2,
                Relation.LE,
            )
        )
    return Instance(name="blades", S=S, cycle=cycle, claims=claims, parameters={"m": m})


def _blade_names(S: PointSet) -> list[str]:
    return [S.label(i)[0] for i in range(len(S))]


def _blade_members(S: PointSet) -> dict[str, list[int]]:
    """Point indices of each blade, ordered by the number in the label."""
    names = _blade_names(S)
    return {
        x: sorted(
            (i for i, name in enumerate(names) if name == x), key=lambda i: int(S.label(i)[1:])
        )
        for x in "abc"
    }


def blades_zigzag_cycle(S: PointSet) -> HamiltonianCycle:
    """Zig-zag along blade a, then alternate between blades b and c.

    The a-part is a1, a(h+1), a2, a(h+2), ... with h = ceil(m / 2); the rest is
    b1 cm b2 c(m-1) ... bm c1, so 2m - 1 of its edges join blade b to blade c.
    """
    blade = _blade_members(S)
    a = blade["a"]
    half = (len(a) + 1) // 2
    a_part = [i for pair in zip_longest(a[:half], a[half:]) for i in pair if i is not None]
    bc_part = [i for pair in zip(blade["b"], reversed(blade["c"])) for i in pair]
    return HamiltonianCycle(tuple(a_part + bc_part))


def blades_candidate_cycle(S: PointSet, max_rounds: Optional[int] = None) -> HamiltonianCycle:
    """Zig-zag cycle improved by best-improvement segment reversals.

    Reversing order[i..j] replaces two cycle edges by two new ones. Its gain is read off the
    crossing table and the number of cycle edges each segment crosses, so a round costs one
    table reduction plus O(n^2) lookups. At most max_rounds (default n) reversals are made.
    """
    table = crossing_table(S)
    order = list(blades_zigzag_cycle(S).order)
    n = len(order)
    max_rounds = max_rounds if max_rounds is not None else n
    for _ in range(max_rounds):
        tails = np.array(order)
        crossed = table[:, :, tails, np.roll(tails, -1)].sum(axis=2)
        best_gain, best_move = 0, None
        for i, j in combinations(range(1, n), 2):
            old = ((order[i - 1], order[i]), (order[j], order[(j + 1) % n]))
            new = ((order[i - 1], order[j]), (order[i], order[(j + 1) % n]))
            gain = (
                int(crossed[new[0]] + crossed[new[1]] - crossed[old[0]] - crossed[old[1]])
                - sum(int(table[e + f]) for e in new for f in old)
                + int(table[new[0] + new[1]])
                + int(table[old[0] + old[1]])
            )
            if gain > best_gain:
                best_gain, best_move = gain, (i, j)
        if best_move is None:
            break
        i, j = best_move
        order[i : j + 1] = order[i : j + 1][::-1]
    return HamiltonianCycle(tuple(order))


def blade_edge_classes(S: PointSet, C: HamiltonianCycle) -> BladeEdgeCounts:
    names = _blade_names(S)
    counts = {key: 0 for key in ("aa", "bb", "cc", "ab", "bc", "ca")}
    for i, j in C.index_edges():
        pair = names[i] + names[j]
        key = next(k for k in counts if sorted(k) == sorted(pair))
        counts[key] += 1
    return BladeEdgeCounts(
        counts["aa"], counts["bb"], counts["cc"], counts["ab"], counts["bc"], counts["ca"]
    )


def blades_class_bound(counts: BladeEdgeCounts) -> int:
    """Crossings allowed when only edges of one class cross: sum of C(class size, 2)."""
    sizes = (counts.a + counts.d, counts.b + counts.e, counts.c + counts.f)
    return sum(size * (size - 1) // 2 for size in sizes)


def blades_separation_holds(S: PointSet) -> bool:
    """No two vertex-disjoint segments of different classes cross (all segments on S)."""
    names = _blade_names(S)
    pairs = list(combinations(range(len(S)), 2))
    for (i, j), (u, v) in combinations(pairs, 2):
        if {i, j} & {u, v}:
            continue
        if _blade_class(names[i], names[j]) == _blade_class(names[u], names[v]):
            continue
        if segments_cross(Segment(S[i], S[j]), Segment(S[u], S[v])):
            return False
    return True


# simple convex cycles on separated parts


def _sorted_by_distance(points: Sequence[Point], line: Line) -> list[Point]:
    ordered = sorted(points, key=line.distance_key)
    for p, q in zip(ordered, ordered[1:]):
        if line.distance_key(p) == line.distance_key(q):
            raise GeneralPositionViolationError(f"{p} and {q} are equidistant from {line}")
    return ordered


def ray_separated_sets(k: int, size: int) -> SeparatedSets:
    """k parts of `size` points on k rays, each cut off by a line normal to its own ray."""
    if k < 3 or size < 1:
        raise InvalidSizeError(f"k={k}, size={size}")
    directions = [rational_unit_vector(-math.pi + math.pi * (2 * j + 1) / k) for j in range(k)]
    # radii stay below 2 / cos(pi / k) so every transversal is a convex k-gon
    spread = Fraction(1 - math.cos(math.pi / k)).limit_denominator(10**6)
    parts = tuple(
        tuple(d.scale(2 + spread * Fraction(t, size)) for t in range(size)) for d in directions
    )
    lines = []
    for d, part in zip(directions, parts):
        own = min(d.x * p.x + d.y * p.y for p in part)
        others = max(d.x * p.x + d.y * p.y for other in parts if other is not part for p in other)
        if own <= others:
            raise SeparationViolationError(f"rays too close for k={k}")
        lines.append(Line(d.x, d.y, (own + others) / 2))
    return SeparatedSets(parts, tuple(lines))


def _check_separation(parts: SeparatedSets):
    for i, (part, line) in enumerate(zip(parts.parts, parts.lines)):
        sides = {line.side(p) for p in part}
        others = {line.side(p) for j, other in enumerate(parts.parts) if j != i for p in other}
        if len(sides) != 1 or 0 in sides or others != {-next(iter(sides))}:
            raise SeparationViolationError(f"line {i + 1} does not separate part {i + 1}")


def convex_cycles_family(parts: SeparatedSets, k: int) -> Instance:
    """N mutually crossing simple convex k-cycles on separated parts of size N.

    Parts are ordered from closest to furthest from their line; cycle i takes the i-th point
    of parts 2..k and the (N - i + 1)-th point of part 1.
    """
    if k < 4 or len(parts.parts) != k or len(parts.lines) != k:
        raise InvalidSizeError(f"need k >= 4 parts and lines, k={k}")
    size = len(parts.parts[0])
    if size < 1 or any(len(part) != size for part in parts.parts):
        raise InvalidSizeError("parts must have equal, positive size")
    _check_separation(parts)
    ordered = [_sorted_by_distance(part, line) for part, line in zip(parts.parts, parts.lines)]

    forward, backward = list(range(k)), [0] + list(range(k - 1, 0, -1))
    for transversal in product(*ordered):
        if not in_convex_position(transversal) or cyclic_hull_order(transversal) not in (
            forward,
            backward,
        ):
            raise TransversalNotConvexError(f"transversal {transversal} is not a convex k-gon")

    members = tuple(
        GeomGraph(
            GraphKind.K_CYCLE,
            (ordered[0][size - i],) + tuple(ordered[t][i - 1] for t in range(1, k)),
        )
        for i in range(1, size + 1)
    )
    points = tuple(p for part in ordered for p in part)
    labels = tuple(f"p{t + 1}.{r + 1}" for t in range(k) for r in range(size))
    return Instance(
        name="convex-cycles",
        S=PointSet(points, labels),
        family=Family(members, FamilyKind.CROSSING),
        claims=[Claim(f"{size} mutually crossing convex {k}-cycles", "crossing_family", size)],
        parameters={
            "k": k,
            "size": size,
            "lines": [[fraction_to_str(v) for v in (L.a, L.b, L.c)] for L in parts.lines],
        },
    )


# intersecting families of triangles


def intersecting_triangles(S: PointSet, cap: int = MAX_WEDGE_POINTS) -> Instance:
    """ceil(3m^2/4) edge-disjoint, pairwise intersecting triangles on 6m points.

    Points of W1, W3 and W5 are ranked by distance to L2, L1 and L3 respectively; the
    triangles use the triples of ranks with a constant sum, which are pairwise incomparable.
    """
    n = len(S)
    if n < 6 or n % 6:
        raise InvalidSizeError(f"intersecting_triangles needs 6m points, got {n}")
    m = n // 6
    partition = six_wedge_partition(S, cap=cap)
    if partition.counts != (m,) * 6:
        raise PartitionFailureError(f"wedge counts {partition.counts}, expected {m} each")
    line_1, line_2, line_3 = partition.lines
    a = _sorted_by_distance(partition.wedges[0], line_2)
    b = _sorted_by_distance(partition.wedges[2], line_1)
    c = _sorted_by_distance(partition.wedges[4], line_3)

    triples = antichain_triples(m)
    members = tuple(triangle(a[i - 1], b[j - 1], c[k - 1]) for i, j, k in triples)
    size = ceil_three_quarters_square(m)
    if len(members) != size:
        raise CertificationError(f"{len(members)} triangles, expected {size}")
    return Instance(
        name="intersecting-triangles",
        S=S,
        family=Family(members, FamilyKind.INTERSECTING),
        claims=[Claim(f"{size} edge-disjoint intersecting triangles", "intersecting_family", size)],
        parameters={
            "m": m,
            "triples": [list(t) for t in triples],
            "wedge_apex": [fraction_to_str(partition.apex.x), fraction_to_str(partition.apex.y)],
            "wedge_lines": [
                [fraction_to_str(v) for v in (L.a, L.b, L.c)] for L in partition.lines
            ],
        },
    )


def three_ray_pointset(n: int) -> Instance:
    """Points a_i, b_i, c_i close to three rays at 120 degrees, at distance i + 1 from the origin.

    Transversal triangles nest when their index triples are comparable and cross otherwise.
    """
    if n < 1:
        raise InvalidSizeError(f"n={n} < 1")
    eps = Fraction(1, 64 * n * n)
    points, labels = [], []
    blades = {}
    for name, angle in BLADE_ANGLES.items():
        direction = rational_unit_vector(angle)
        side = Point(direction.y, -direction.x)
        blades[name] = []
        for i in range(1, n + 1):
            r = i + 1
            point = direction.scale(r) + side.scale(eps * r * r)
            points.append(point)
            labels.append(f"{name}{i}")
            blades[name].append(point)

    triples = antichain_triples(n)
    members = tuple(
        triangle(blades["a"][i - 1], blades["b"][j - 1], blades["c"][k - 1]) for i, j, k in triples
    )
    size = ceil_three_quarters_square(n)
    claims = [Claim(f"{size} edge-disjoint intersecting triangles", "intersecting_family", size)]
    if n <= MAX_TRANSVERSAL_N:
        claims.append(
            Claim(
                f"largest intersecting family of transversal triangles has {size} members",
                "max_transversal_triangles",
                size,
            )
        )
    return Instance(
        name="three-ray",
        S=PointSet(tuple(points), tuple(labels)),
        family=Family(members, FamilyKind.INTERSECTING),
        claims=claims,
        parameters={"n": n, "triples": [list(t) for t in triples]},
    )


def transversal_triangles(S: PointSet) -> list[GeomGraph]:
    """All triangles with one vertex labelled a*, one b* and one c*."""
    groups = {x: [p for i, p in enumerate(S.points) if S.label(i)[0] == x] for x in "abc"}
    return [triangle(*t) for t in product(groups["a"], groups["b"], groups["c"])]


def circle_blocks(n: int) -> PointSet:
    """3n points on a circle, labelled a1..an, b1..bn, c1..cn in counterclockwise order."""
    if n < 1:
        raise InvalidSizeError(f"n={n} < 1")
    labels = tuple(f"{x}{i}" for x in "abc" for i in range(1, n + 1))
    return PointSet(tuple(rational_circle_points(3 * n)), labels)


def convex_intersecting_family(S: PointSet) -> Instance:
    """n^2 edge-disjoint intersecting triangles on 3n points in convex position.

    S lists A, then B, then C, and each block is contiguous along the hull. The matching
    M_i joins b_j to c_(j+i mod n); its edges together with a_i give n triangles.
    """
    if len(S) % 3 or len(S) == 0:
        raise InvalidSizeError(f"convex_intersecting_family needs 3n points, got {len(S)}")
    n = len(S) // 3
    if not in_convex_position(S.points):
        raise NotConvexPositionError("points are not in convex position")
    blocks = [index // n for index in cyclic_hull_order(S.points)]
    changes = sum(x != y for x, y in zip(blocks, blocks[1:] + blocks[:1]))
    if changes != 3:
        raise NotConvexPositionError("blocks A, B, C are not contiguous along the hull")

    a, b, c = S.points[:n], S.points[n : 2 * n], S.points[2 * n :]
    members = tuple(
        triangle(a[i], b[j], c[(j + i) % n]) for i in range(n) for j in range(n)
    )
    return Instance(
        name="convex-intersecting",
        S=S,
        family=Family(members, FamilyKind.INTERSECTING),
        claims=[
            Claim(f"{n * n} edge-disjoint intersecting triangles", "intersecting_family", n * n)
        ],
        parameters={"n": n},
    )
