"""Geometric graphs, families and the crossing / avoiding counters of Hamiltonian cycles."""
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Union

import numpy as np

from crossing_families.geom_core import (
    Elbow,
    Orientation,
    Point,
    PointSet,
    Segment,
    elbows_cross,
    orientation,
    segments_cross,
)
from crossing_families.utils.errors import (
    DegenerateInputError,
    InvalidSizeError,
    KindMismatchError,
    SharedVertexError,
)

Edge = Union[Segment, Elbow]


class GraphKind(str, Enum):
    """Kinds of geometric graphs."""

    MATCHING_EDGE = "matching_edge"
    ELBOW = "elbow"
    K_PATH = "k_path"
    K_CYCLE = "k_cycle"
    TRIANGLE = "triangle"


class FamilyKind(str, Enum):
    """crossing = vertex-disjoint members, intersecting = edge-disjoint members.

    matching = a perfect matching given as segments, with no pairwise relation declared.
    """

    CROSSING = "crossing"
    INTERSECTING = "intersecting"
    MATCHING = "matching"


_MIN_VERTICES = {
    GraphKind.MATCHING_EDGE: (2, 2),
    GraphKind.ELBOW: (2, 2),
    GraphKind.K_PATH: (2, None),
    GraphKind.K_CYCLE: (3, None),
    GraphKind.TRIANGLE: (3, 3),
}


@dataclass(frozen=True)
class GeomGraph:
    """A geometric graph given by its kind and ordered vertices.

    For elbows the first vertex is the vertical anchor and the second the horizontal one.
    """

    kind: GraphKind
    vertices: tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "kind", GraphKind(self.kind))
        object.__setattr__(self, "vertices", tuple(self.vertices))
        low, high = _MIN_VERTICES[self.kind]
        count = len(self.vertices)
        if count < low or (high is not None and count > high):
            raise InvalidSizeError(f"{self.kind.value} cannot have {count} vertices")
        if len(set(self.vertices)) != count:
            raise DegenerateInputError(f"repeated vertex in {self.kind.value}")

    @property
    def vertex_pairs(self) -> list[tuple[Point, Point]]:
        """Consecutive vertex pairs, one per edge."""
        pairs = list(zip(self.vertices, self.vertices[1:]))
        if self.kind in (GraphKind.K_CYCLE, GraphKind.TRIANGLE):
            pairs.append((self.vertices[-1], self.vertices[0]))
        return pairs

    @property
    def edges(self) -> list[Edge]:
        if self.kind == GraphKind.ELBOW:
            return [Elbow(*self.vertices)]
        return [Segment(a, b) for a, b in self.vertex_pairs]

    @property
    def edge_keys(self) -> list[frozenset]:
        return [frozenset(pair) for pair in self.vertex_pairs]

    @property
    def is_elbow(self) -> bool:
        return self.kind == GraphKind.ELBOW


def triangle(a: Point, b: Point, c: Point) -> GeomGraph:
    return GeomGraph(GraphKind.TRIANGLE, (a, b, c))


@dataclass(frozen=True)
class Family:
    """Ordered collection of geometric graphs with a declared family kind."""

    members: tuple[GeomGraph, ...]
    kind: FamilyKind

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        object.__setattr__(self, "kind", FamilyKind(self.kind))

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class HamiltonianCycle:
    """Visiting order of all indices of a point set."""

    order: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        if sorted(self.order) != list(range(len(self.order))):
            raise DegenerateInputError(f"{self.order} is not a permutation")

    def __len__(self) -> int:
        return len(self.order)

    def index_edges(self) -> list[tuple[int, int]]:
        n = len(self.order)
        return [(self.order[i], self.order[(i + 1) % n]) for i in range(n)]

    def segments(self, S: PointSet) -> list[Segment]:
        if len(S) != len(self.order):
            raise InvalidSizeError(f"cycle on {len(self.order)} points used with {len(S)} points")
        return [Segment(S[i], S[j]) for i, j in self.index_edges()]

    def as_graph(self, S: PointSet) -> GeomGraph:
        return GeomGraph(GraphKind.K_CYCLE, tuple(S[i] for i in self.order))


def _edges_cross(e: Edge, f: Edge) -> bool:
    """Crossing test for two edges; incident edges never cross."""
    if isinstance(e, Elbow) != isinstance(f, Elbow):
        raise KindMismatchError("elbows and straight edges cannot be compared")
    if e.endpoints & f.endpoints:
        return False
    if isinstance(e, Elbow):
        return elbows_cross(e, f)
    return segments_cross(e, f)


def _check_same_edge_type(g1: GeomGraph, g2: GeomGraph):
    if g1.is_elbow != g2.is_elbow:
        raise KindMismatchError(f"cannot mix {g1.kind.value} and {g2.kind.value}")


def graphs_cross(g1: GeomGraph, g2: GeomGraph) -> bool:
    """True iff some edge of g1 crosses some edge of g2; the graphs must be vertex-disjoint."""
    if set(g1.vertices) & set(g2.vertices):
        raise SharedVertexError("graphs share a vertex")
    _check_same_edge_type(g1, g2)
    return any(_edges_cross(e, f) for e in g1.edges for f in g2.edges)


def graphs_intersect(g1: GeomGraph, g2: GeomGraph) -> bool:
    """True iff some pair of non-incident edges, one per graph, crosses."""
    _check_same_edge_type(g1, g2)
    return any(_edges_cross(e, f) for e in g1.edges for f in g2.edges)


def vertex_disjoint(g1: GeomGraph, g2: GeomGraph) -> bool:
    return not set(g1.vertices) & set(g2.vertices)


def edge_disjoint(g1: GeomGraph, g2: GeomGraph) -> bool:
    return not set(g1.edge_keys) & set(g2.edge_keys)


def _check_family(F: Family, kind: FamilyKind):
    if F.kind != kind:
        raise KindMismatchError(f"expected a {kind.value} family, got {F.kind.value}")
    if len({g.is_elbow for g in F.members}) > 1:
        raise KindMismatchError("family mixes elbows and straight-edge graphs")


def is_crossing_family(F: Family) -> bool:
    """Pairwise vertex-disjoint and pairwise crossing."""
    _check_family(F, FamilyKind.CROSSING)
    for g1, g2 in combinations(F.members, 2):
        if not vertex_disjoint(g1, g2) or not graphs_cross(g1, g2):
            return False
    return True


def is_intersecting_family(F: Family) -> bool:
    """Pairwise edge-disjoint and every pair has crossing non-incident edges."""
    _check_family(F, FamilyKind.INTERSECTING)
    for g1, g2 in combinations(F.members, 2):
        if not edge_disjoint(g1, g2) or not graphs_intersect(g1, g2):
            return False
    return True


@dataclass(frozen=True)
class EdgePairCounts:
    """Classification of the unordered edge pairs of a Hamiltonian cycle."""

    crossing: int
    avoiding: int
    incident: int

    @property
    def non_incident(self) -> int:
        return self.crossing + self.avoiding


def classify_edge_pairs(S: PointSet, C: HamiltonianCycle) -> EdgePairCounts:
    """Split the C(n, 2) edge pairs into crossing, avoiding and incident ones."""
    if len(S) < 3:
        raise InvalidSizeError("a Hamiltonian cycle needs at least 3 points")
    crossing = avoiding = incident = 0
    for e, f in combinations(C.segments(S), 2):
        if e.endpoints & f.endpoints:
            incident += 1
        elif segments_cross(e, f):
            crossing += 1
        else:
            avoiding += 1
    return EdgePairCounts(crossing, avoiding, incident)


def count_crossings(S: PointSet, C: HamiltonianCycle) -> int:
    """Number of crossing pairs of edges of C."""
    return classify_edge_pairs(S, C).crossing


def count_avoiding_pairs(S: PointSet, C: HamiltonianCycle) -> int:
    """Number of pairs of edges of C that are neither incident nor crossing."""
    if len(S) < 4:
        raise InvalidSizeError("avoiding pairs need at least 4 points")
    return classify_edge_pairs(S, C).avoiding


def edge_crossing_counts(S: PointSet, C: HamiltonianCycle) -> list[int]:
    """Per-edge crossing counts; entry i belongs to the edge order[i] -> order[i + 1]."""
    segments = C.segments(S)
    counts = [0] * len(segments)
    for i, j in combinations(range(len(segments)), 2):
        if segments_cross(segments[i], segments[j]):
            counts[i] += 1
            counts[j] += 1
    return counts


def max_crossings_bound(n: int) -> int:
    """Maximum number of crossings of a Hamiltonian cycle on n points.

    Usage:
        >>> max_crossings_bound(7)
        14
        >>> max_crossings_bound(6)
        7
    """
    if n < 3:
        raise InvalidSizeError(f"n={n} < 3")
    if n == 3:
        return 0
    if n % 2:
        return n * (n - 3) // 2
    return n * (n - 4) // 2 + 1


def non_incident_pairs(n: int) -> int:
    """n(n - 3) / 2, the number of non-incident edge pairs of a cycle on n >= 4 points."""
    return n * (n - 3) // 2


def same_side(segment: Segment, p: Point, q: Point) -> bool:
    """True when p and q lie strictly on the same side of the segment's supporting line."""
    side_p = segment.side(p)
    return side_p != Orientation.COLLINEAR and side_p == segment.side(q)


def crossing_table(S: PointSet) -> np.ndarray:
    """Boolean array with table[i, j, u, v] true iff the segments ij and uv cross.

    Read off the exact orientation of every triple; pairs involving a collinear triple are
    decided by segments_cross. Segments sharing an endpoint never cross.
    """
    n = len(S)
    turns = np.zeros((n, n, n), dtype=np.int8)
    collinear = False
    for i, j, k in combinations(range(n), 3):
        sign = int(orientation(S[i], S[j], S[k]))
        collinear = collinear or sign == 0
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            turns[a, b, c] = sign
            turns[b, a, c] = -sign
    sides = turns[:, :, :, None] * turns[:, :, None, :]
    table = (sides < 0) & (sides.transpose(2, 3, 0, 1) < 0)
    if not collinear:
        return table
    for (i, j), (u, v) in combinations(combinations(range(n), 2), 2):
        if len({i, j, u, v}) < 4:
            continue
        if 0 not in (turns[i, j, u], turns[i, j, v], turns[u, v, i], turns[u, v, j]):
            continue
        crossed = segments_cross(Segment(S[i], S[j]), Segment(S[u], S[v]))
        for a, b in ((i, j), (j, i)):
            for c, d in ((u, v), (v, u)):
                table[a, b, c, d] = table[c, d, a, b] = crossed
    return table
