"""Brute-force ground truth for the quantities claimed by the constructions."""
import math
from dataclasses import dataclass
from enum import Enum
from functools import partial
from itertools import combinations, permutations, product
from typing import Iterator, Optional, Sequence

import networkx as nx
import numpy as np
from networkx.algorithms import bipartite
from tqdm import tqdm

from crossing_families.constructions import (
    EDGE_LABELS,
    MAX_HAM_POINTS,
    MAX_REMOVAL_FAMILY,
    all_elbows,
    transversal_triangles,
    triangle_edge_labels,
    two_path,
)
from crossing_families.geom_core import PointSet, Segment, segments_cross, squared_distance
from crossing_families.graphs import (
    Family,
    GeomGraph,
    GraphKind,
    HamiltonianCycle,
    crossing_table,
    edge_disjoint,
    graphs_cross,
    graphs_intersect,
    non_incident_pairs,
    vertex_disjoint,
)
from crossing_families.matchings import split_classes
from crossing_families.utils.errors import (
    InvalidSizeError,
    KindMismatchError,
    ResourceLimitError,
    TieUnresolvedError,
)
from crossing_families.utils.intervals import (
    MAX_DPS,
    START_DPS,
    approximate_root_sum,
    certified_sign,
    root_sum,
)

MAX_CLIQUE_GRAPHS = 200
MAX_GENERAL_MATCHING_POINTS = 12
MAX_BIPARTITE_MATCHING_M = 8
MAX_ANTICHAIN_N = 12


class Disjointness(str, Enum):
    """Pairwise disjointness required inside a family."""

    VERTEX = "vertex"
    EDGE = "edge"


class MatchingMode(str, Enum):
    BIPARTITE_AB = "bipartite_AB"
    GENERAL = "general"


@dataclass(frozen=True)
class CrossingGraph:
    """Members as nodes; adjacency[i, j] iff members i and j are disjoint and cross."""

    nodes: tuple[int, ...]
    adjacency: np.ndarray

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.nodes)
        rows, cols = np.nonzero(np.triu(self.adjacency, k=1))
        graph.add_edges_from(zip(rows.tolist(), cols.tolist()))
        return graph


@dataclass(frozen=True)
class SubfamilyResult:
    size: int
    witness: tuple[int, ...]


@dataclass(frozen=True)
class HamiltonianMaximum:
    value: int
    witness: HamiltonianCycle


@dataclass(frozen=True)
class MatchingResult:
    """Longest perfect matching as index pairs into S; length is an approximation for reports."""

    pairs: tuple[tuple[int, int], ...]
    length: float
    is_crossing_free: bool


@dataclass(frozen=True)
class RemovalResult:
    """Largest crossing family of 2-paths over all removal choices, with a witness choice."""

    size: int
    assignment: tuple[str, ...]


def build_crossing_graph(graphs: Sequence[GeomGraph], disjointness: Disjointness) -> CrossingGraph:
    disjointness = Disjointness(disjointness)
    count = len(graphs)
    adjacency = np.zeros((count, count), dtype=bool)
    for i, j in combinations(range(count), 2):
        if disjointness == Disjointness.VERTEX:
            related = vertex_disjoint(graphs[i], graphs[j]) and graphs_cross(graphs[i], graphs[j])
        else:
            related = edge_disjoint(graphs[i], graphs[j]) and graphs_intersect(
                graphs[i], graphs[j]
            )
        adjacency[i, j] = adjacency[j, i] = related
    return CrossingGraph(tuple(range(count)), adjacency)


def max_crossing_subfamily(
    graphs: Sequence[GeomGraph],
    disjointness: Disjointness = Disjointness.VERTEX,
    cap: int = MAX_CLIQUE_GRAPHS,
) -> SubfamilyResult:
    """Largest pairwise disjoint, pairwise crossing subfamily (maximum clique).

    Usage:
        >>> max_crossing_subfamily(crossing_triangles_grid(2).family.members).size
        8
    """
    if len(graphs) > cap:
        raise ResourceLimitError("max_clique_graphs", cap, len(graphs))
    if not graphs:
        return SubfamilyResult(0, ())
    clique, size = nx.max_weight_clique(
        build_crossing_graph(graphs, disjointness).to_networkx(), weight=None
    )
    return SubfamilyResult(size, tuple(sorted(clique)))


def _check_ham_size(S: PointSet, cap: int):
    n = len(S)
    if n < 4:
        raise InvalidSizeError(f"Hamiltonian enumeration needs at least 4 points, got {n}")
    cap = min(cap, MAX_HAM_POINTS)
    if n > cap:
        raise ResourceLimitError("max_ham_points", cap, n)


def iter_cycle_crossings(
    S: PointSet, cap: int = MAX_HAM_POINTS, progress: bool = False
) -> Iterator[tuple[tuple[int, ...], int]]:
    """Every Hamiltonian cycle once (starting at 0, second vertex < last) with its crossings.

    Cycles are produced in lexicographic order.
    """
    _check_ham_size(S, cap)
    n = len(S)
    table = crossing_table(S)
    total = math.factorial(n - 1) // 2
    with tqdm(total=total, desc="Hamiltonian cycles", disable=not progress) as bar:
        for rest in permutations(range(1, n)):
            if rest[0] > rest[-1]:
                continue
            order = np.array((0,) + rest)
            heads = np.roll(order, -1)
            pairs = table[order[:, None], heads[:, None], order[None, :], heads[None, :]]
            bar.update(1)
            yield (0,) + rest, int(pairs.sum()) // 2


def enumerate_hamiltonian_max_crossings(
    S: PointSet, cap: int = MAX_HAM_POINTS, progress: bool = False
) -> HamiltonianMaximum:
    """Exact maximum of count_crossings over all Hamiltonian cycles on S.

    The witness is the lexicographically smallest maximizer among cycles starting at 0.
    """
    best_value, best_order = -1, None
    for order, value in iter_cycle_crossings(S, cap, progress):
        if value > best_value:
            best_value, best_order = value, order
    return HamiltonianMaximum(best_value, HamiltonianCycle(best_order))


def min_avoiding_pairs(S: PointSet, cap: int = MAX_HAM_POINTS, progress: bool = False) -> int:
    """Exact minimum number of avoiding edge pairs over all Hamiltonian cycles on S."""
    n = len(S)
    if n % 2:
        raise InvalidSizeError(f"min_avoiding_pairs needs an even number of points, got {n}")
    pairs = non_incident_pairs(n)
    return min(pairs - value for _, value in iter_cycle_crossings(S, cap, progress))


def _perfect_matchings(indices: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    if not indices:
        yield []
        return
    first, rest = indices[0], indices[1:]
    for position, partner in enumerate(rest):
        remaining = rest[:position] + rest[position + 1 :]
        for tail in _perfect_matchings(remaining):
            yield [(first, partner)] + tail


def _matching_candidates(S: PointSet, mode: MatchingMode, caps: dict):
    n = len(S)
    if mode == MatchingMode.BIPARTITE_AB:
        A, B = split_classes(S)
        cap = caps.get("max_bipartite_matching_m", MAX_BIPARTITE_MATCHING_M)
        if len(A) > cap:
            raise ResourceLimitError("max_bipartite_matching_m", cap, len(A))
        a_index = [S.index(a) for a in A]
        b_index = [S.index(b) for b in B]
        for sigma in permutations(range(len(A))):
            yield [(a_index[i], b_index[s]) for i, s in enumerate(sigma)]
    else:
        cap = caps.get("max_general_matching_points", MAX_GENERAL_MATCHING_POINTS)
        if n > cap:
            raise ResourceLimitError("max_general_matching_points", cap, n)
        yield from _perfect_matchings(list(range(n)))


def _squared_lengths(S: PointSet, pairs) -> list:
    return [squared_distance(S[i], S[j]) for i, j in pairs]


def _matching_gap(S: PointSet, first, second):
    return root_sum(_squared_lengths(S, first)) - root_sum(_squared_lengths(S, second))


def longest_perfect_matching_bruteforce(
    S: PointSet,
    mode: MatchingMode = MatchingMode.BIPARTITE_AB,
    caps: Optional[dict] = None,
    start_dps: int = START_DPS,
    max_dps: int = MAX_DPS,
) -> MatchingResult:
    """Certified longest perfect matching by exhaustive enumeration.

    Candidates are ranked by an approximate length; the winner is then certified strictly
    longer than every other candidate with interval arithmetic.

    Args:
        S: point set with an even number of points (labels a1..am, b1..bm in bipartite mode)
        mode: bipartite_AB (m! candidates) or general ((n - 1)!! candidates)
        caps: overrides for max_bipartite_matching_m / max_general_matching_points
        start_dps: initial interval precision
        max_dps: interval precision ceiling

    Returns:
        MatchingResult of the unique longest matching
    """
    if len(S) % 2 or len(S) == 0:
        raise InvalidSizeError(f"perfect matchings need a positive even size, got {len(S)}")
    mode = MatchingMode(mode)
    candidates = [
        tuple(sorted(tuple(sorted(pair)) for pair in matching))
        for matching in _matching_candidates(S, mode, caps or {})
    ]
    approx = [approximate_root_sum(_squared_lengths(S, pairs), start_dps) for pairs in candidates]
    best = max(range(len(candidates)), key=lambda c: approx[c])

    certified = False
    while not certified:
        certified = True
        for other in range(len(candidates)):
            if other == best:
                continue
            sign = certified_sign(
                partial(_matching_gap, S, candidates[best], candidates[other]), start_dps, max_dps
            )
            if sign is None:
                raise TieUnresolvedError(
                    f"matchings {candidates[best]} and {candidates[other]} tie at {max_dps} dps"
                )
            if sign < 0:
                best, certified = other, False
                break

    pairs = candidates[best]
    segments = [Segment(S[i], S[j]) for i, j in pairs]
    crossing_free = not any(segments_cross(s, t) for s, t in combinations(segments, 2))
    return MatchingResult(pairs, approx[best], crossing_free)


def max_antichain_3d(n: int, cap: int = MAX_ANTICHAIN_N) -> int:
    """Largest antichain of [n]^3 under coordinatewise dominance, via Dilworth.

    The minimum chain cover equals the number of elements minus a maximum matching in the
    bipartite graph of strict dominance pairs.

    Usage:
        >>> max_antichain_3d(3)
        7
    """
    if n < 1:
        raise InvalidSizeError(f"n={n} < 1")
    if n > cap:
        raise ResourceLimitError("max_antichain_n", cap, n)
    elements = list(product(range(1, n + 1), repeat=3))
    graph = nx.Graph()
    graph.add_nodes_from((("low", x) for x in elements), bipartite=0)
    graph.add_nodes_from((("high", y) for y in elements), bipartite=1)
    for x in elements:
        for y in product(*(range(c, n + 1) for c in x)):
            if y != x:
                graph.add_edge(("low", x), ("high", y))
    top = [("low", x) for x in elements]
    matching = bipartite.hopcroft_karp_matching(graph, top_nodes=top)
    return len(elements) - len(matching) // 2


def grid_chain_partition(n: int) -> list[list[tuple[int, int]]]:
    """Partition of [n]^2 into n chains of sizes 2n - 1, 2n - 3, ..., 1."""
    if n < 1:
        raise InvalidSizeError(f"n={n} < 1")
    chains = []
    for t in range(1, n + 1):
        corner = n - t + 1
        chain = [(t, y) for y in range(1, corner + 1)] + [(x, corner) for x in range(t + 1, n + 1)]
        chains.append(chain)
    return chains


def antichain_upper_bound(n: int) -> int:
    """Each chain of [n]^2 carries at most min(|chain|, n) triples of an antichain."""
    return sum(min(len(chain), n) for chain in grid_chain_partition(n))


def _check_triangles(F: Family):
    for member in F.members:
        if member.kind != GraphKind.TRIANGLE:
            raise KindMismatchError(f"expected triangles, got {member.kind.value}")


def _two_path_table(F: Family) -> dict:
    """Crossing relation between the 2-paths left after removing a labelled edge."""
    paths = [
        {x: two_path(T, edges[x]) for x in EDGE_LABELS}
        for T, edges in ((T, triangle_edge_labels(T)) for T in F.members)
    ]
    table = {}
    for t, u in combinations(range(len(F)), 2):
        disjoint = vertex_disjoint(F.members[t], F.members[u])
        for x, y in product(EDGE_LABELS, repeat=2):
            table[t, x, u, y] = disjoint and graphs_cross(paths[t][x], paths[u][y])
    return table


def best_2path_removal(
    F: Family, exhaustive: bool = False, cap: int = MAX_REMOVAL_FAMILY, progress: bool = False
) -> RemovalResult:
    """Maximum over edge removals of the largest crossing family among the remaining 2-paths.

    The default mode runs one clique search over (triangle, removed edge) choices: a clique
    takes at most one choice per triangle and the other triangles may lose any edge. The
    exhaustive mode enumerates all 3^|F| removal assignments.
    """
    _check_triangles(F)
    count = len(F)
    if count > cap:
        raise ResourceLimitError("max_removal_family", cap, count)
    if count == 0:
        return RemovalResult(0, ())
    table = _two_path_table(F)

    if not exhaustive:
        graph = nx.Graph()
        graph.add_nodes_from(product(range(count), EDGE_LABELS))
        graph.add_edges_from(
            ((t, x), (u, y)) for (t, x, u, y), crossing in table.items() if crossing
        )
        clique, size = nx.max_weight_clique(graph, weight=None)
        chosen = dict(clique)
        return RemovalResult(size, tuple(chosen.get(t, EDGE_LABELS[0]) for t in range(count)))

    best = RemovalResult(0, ())
    assignments = product(EDGE_LABELS, repeat=count)
    for assignment in tqdm(
        assignments, total=3**count, desc="Removal assignments", disable=not progress
    ):
        graph = nx.Graph()
        graph.add_nodes_from(range(count))
        graph.add_edges_from(
            (t, u)
            for t, u in combinations(range(count), 2)
            if table[t, assignment[t], u, assignment[u]]
        )
        _, size = nx.max_weight_clique(graph, weight=None)
        if size > best.size:
            best = RemovalResult(size, assignment)
    return best


def two_path_family_max_edge_clique(paths: Sequence[GeomGraph]) -> int:
    """Largest set of pairwise crossing edges taken from a family of 2-paths."""
    segments = [edge for path in paths for edge in path.edges]
    graph = nx.Graph()
    graph.add_nodes_from(range(len(segments)))
    graph.add_edges_from(
        (i, j)
        for i, j in combinations(range(len(segments)), 2)
        if segments_cross(segments[i], segments[j])
    )
    if not segments:
        return 0
    _, size = nx.max_weight_clique(graph, weight=None)
    return size


def max_crossing_elbows(S: PointSet, cap: int = MAX_CLIQUE_GRAPHS) -> SubfamilyResult:
    """Largest crossing family among all elbows on S."""
    return max_crossing_subfamily(all_elbows(S), Disjointness.VERTEX, cap)


def max_transversal_triangles(S: PointSet, cap: int = MAX_CLIQUE_GRAPHS) -> SubfamilyResult:
    """Largest intersecting family of triangles with one vertex in each of the groups a, b, c."""
    return max_crossing_subfamily(transversal_triangles(S), Disjointness.EDGE, cap)
