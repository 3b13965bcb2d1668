"""Point sets whose longest perfect matching is crossing-free, and transpositions shortening it.

The segments s_1..s_m have slopes 0 = S(s_1) < ... < S(s_m) < pi/2, clustered left endpoints
a_i and right endpoints b_i on one vertical line. Every b_s lies above the right branch of
each hyperbola with foci a_p, a_q through b_r (p < q <= s, r <= s - 1), which makes the
identity matching {a_i b_i} the unique longest perfect matching.
"""
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import partial
from itertools import combinations
from typing import Sequence

import mpmath

from crossing_families.constructions import Claim, Instance
from crossing_families.geom_core import (
    Point,
    PointSet,
    fraction_to_str,
    rational_unit_vector,
    squared_distance,
)
from crossing_families.graphs import Family, FamilyKind, GeomGraph, GraphKind
from crossing_families.utils.errors import (
    CertificationError,
    IndexOutOfRangeError,
    InvalidSizeError,
    KindMismatchError,
    PrecisionExhaustedError,
    ResourceLimitError,
)
from crossing_families.utils.intervals import (
    MAX_DPS,
    START_DPS,
    certified_sign,
    sqrt_interval,
    to_interval,
)

MAX_VILLANGER_M = 8
DEFAULT_MARGIN = Fraction(1, 1000)
WIDEST_SLOPE = math.radians(40)
X_RETRIES = 4
MAX_SCALE_EXPONENT = 200


class TranspositionType(str, Enum):
    """Kinds of transpositions that shorten a potential matching."""

    TYPE_I = "type_I"
    TYPE_II = "type_II"
    NOT_REDUCING = "not_reducing"


@dataclass(frozen=True)
class PlacementStep:
    """One transposition of the placement procedure: `after` is `before` with i and j swapped."""

    before: tuple[int, ...]
    i: int
    j: int
    after: tuple[int, ...]


def _slopes(m: int) -> list[float]:
    """theta_1 = 0 and theta_i = theta_2 * 3^(i - 2) with theta_m = 40 degrees."""
    theta_2 = WIDEST_SLOPE / 3 ** (m - 2)
    return [0.0] + [theta_2 * 3 ** (i - 2) for i in range(2, m + 1)]


def _left_endpoints(m: int, slopes: Sequence[float]) -> list[Point]:
    theta_2 = slopes[1]
    gamma = min(Fraction(1, 20), Fraction(1, math.ceil(10 / theta_2)))
    steps = [theta_2 / 4] + [1.25 * theta for theta in slopes[1:]]
    points = [Point.of(0, 0)]
    for i in range(1, m):
        points.append(points[-1] + rational_unit_vector(steps[i - 1]).scale(gamma ** (i - 1)))
    return points


def _right_endpoints(left: Sequence[Point], slopes: Sequence[float], x: int) -> list[Point]:
    """Each b_s on the vertical line at x, along direction theta_s from a_s."""
    right = []
    for a, theta in zip(left, slopes):
        direction = rational_unit_vector(theta)
        reach = (x - a.x) / direction.x
        right.append(a + direction.scale(reach))
    return right


def _hyperbola_quadruples(m: int):
    """(p, q, r, s), 0-based, with p < q <= s and r <= s - 1."""
    for s in range(1, m):
        for p, q in combinations(range(s + 1), 2):
            for r in range(s):
                yield p, q, r, s


def _slack_interval(A, B, quadruple, scale: int = 1, margin: Fraction = Fraction(0)):
    """Interval of [d(b_r,a_p) - d(b_r,a_q)] - [d(b_s,a_p) - d(b_s,a_q)] - margin after scaling."""
    p, q, r, s = quadruple
    factor = Fraction(scale * scale)

    def d(b, a):
        return sqrt_interval(squared_distance(b, a) * factor)

    slack = (d(B[r], A[p]) - d(B[r], A[q])) - (d(B[s], A[p]) - d(B[s], A[q]))
    return slack - to_interval(margin)


def _slack_approx(A: Sequence[Point], B: Sequence[Point], quadruple, dps: int) -> mpmath.mpf:
    p, q, r, s = quadruple
    with mpmath.workdps(dps):

        def d(b, a):
            square = squared_distance(b, a)
            return mpmath.sqrt(mpmath.mpf(square.numerator) / square.denominator)

        return (d(B[r], A[p]) - d(B[r], A[q])) - (d(B[s], A[p]) - d(B[s], A[q]))


def _hyperbola_conditions_hold(A, B, start_dps: int, max_dps: int) -> bool:
    for quadruple in _hyperbola_quadruples(len(A)):
        sign = certified_sign(partial(_slack_interval, A, B, quadruple), start_dps, max_dps)
        if sign is None:
            raise PrecisionExhaustedError(f"slack of {quadruple} not certified at {max_dps} dps")
        if sign < 0:
            return False
    return True


def _scale_exponent(A, B, margin: Fraction, start_dps: int, max_dps: int) -> int:
    """Smallest k such that scaling by 2^k lifts every certified slack above margin."""
    quadruples = list(_hyperbola_quadruples(len(A)))
    smallest = min(_slack_approx(A, B, quadruple, start_dps) for quadruple in quadruples)
    k = max(0, math.ceil(math.log2(float(margin) / float(smallest))))
    while k <= MAX_SCALE_EXPONENT:
        lifted = True
        for quadruple in quadruples:
            sign = certified_sign(
                partial(_slack_interval, A, B, quadruple, 2**k, margin), start_dps, max_dps
            )
            if sign is None:
                raise PrecisionExhaustedError(f"margin of {quadruple} not certified")
            if sign < 0:
                lifted = False
                break
        if lifted:
            return k
        k += 1
    raise CertificationError(f"slack stays below {margin} up to scale 2^{MAX_SCALE_EXPONENT}")


def _check_class_distances(A: Sequence[Point], B: Sequence[Point]):
    cross_class = min(squared_distance(a, b) for a in A for b in B)
    intra_class = max(
        squared_distance(p, q) for part in (A, B) for p, q in combinations(part, 2)
    )
    if cross_class <= intra_class:
        raise CertificationError("cross-class distances do not dominate intra-class distances")


def villanger_pointset(
    m: int,
    margin: Fraction = DEFAULT_MARGIN,
    start_dps: int = START_DPS,
    max_dps: int = MAX_DPS,
    cap: int = MAX_VILLANGER_M,
) -> Instance:
    """2m points whose longest perfect matching is the crossing-free identity matching.

    Args:
        m: number of segments, 2 <= m <= cap
        margin: certified lower bound on every hyperbola slack after scaling
        start_dps: initial interval precision
        max_dps: interval precision ceiling
        cap: largest accepted m

    Returns:
        Instance with points a1..am, b1..bm and the identity matching as family
    """
    if m < 2:
        raise InvalidSizeError(f"m={m} < 2")
    if m > cap:
        raise ResourceLimitError("max_villanger_m", cap, m)
    margin = Fraction(margin)
    if margin <= 0:
        raise InvalidSizeError(f"margin {margin} must be positive")

    slopes = _slopes(m)
    A = _left_endpoints(m, slopes)
    x = 1000 * math.ceil(4 / slopes[1] ** 2)
    for _ in range(X_RETRIES):
        B = _right_endpoints(A, slopes, x)
        if _hyperbola_conditions_hold(A, B, start_dps, max_dps):
            break
        x *= 10
    else:
        raise CertificationError(f"hyperbola conditions fail for m={m} up to x={x}")

    k = _scale_exponent(A, B, margin, start_dps, max_dps)
    A = [a.scale(2**k) for a in A]
    B = [b.scale(2**k) for b in B]
    _check_class_distances(A, B)

    labels = tuple(f"a{i}" for i in range(1, m + 1)) + tuple(f"b{i}" for i in range(1, m + 1))
    S = PointSet(tuple(A + B), labels)
    members = tuple(GeomGraph(GraphKind.MATCHING_EDGE, (a, b)) for a, b in zip(A, B))
    return Instance(
        name="villanger",
        S=S,
        family=Family(members, FamilyKind.MATCHING),
        claims=[
            Claim(
                "identity matching is the unique longest perfect matching",
                "longest_matching_identity",
                1,
            ),
            Claim("identity matching has no crossings", "family_crossing_pairs", 0),
        ],
        parameters={"m": m, "margin": fraction_to_str(margin), "scale_exponent": k, "x": x},
    )


def split_classes(S: PointSet) -> tuple[list[Point], list[Point]]:
    """Points labelled a1..am and b1..bm, each list ordered by index."""
    classes = {"a": {}, "b": {}}
    for i, point in enumerate(S.points):
        label = S.label(i)
        if label[:1] not in classes or not label[1:].isdigit():
            raise KindMismatchError(f"label {label!r} is not of the form a<i> or b<i>")
        classes[label[0]][int(label[1:])] = point
    A, B = classes["a"], classes["b"]
    if sorted(A) != list(range(1, len(A) + 1)) or sorted(B) != sorted(A):
        raise KindMismatchError("labels must be a1..am and b1..bm")
    return [A[i] for i in sorted(A)], [B[i] for i in sorted(B)]


def _check_permutation(sigma: Sequence[int], m: int):
    if sorted(sigma) != list(range(1, m + 1)):
        raise InvalidSizeError(f"{tuple(sigma)} is not a permutation of 1..{m}")


def transposition_reduces(
    instance: Instance,
    sigma: Sequence[int],
    i: int,
    j: int,
    start_dps: int = START_DPS,
    max_dps: int = MAX_DPS,
) -> TranspositionType:
    """Classify sigma as the result of swapping positions i < j of its parent.

    Positions and values are 1-based; sigma[i] = s means a_i is matched to b_s. The parent
    has k = sigma[j] at position i and ell = sigma[i] at position j. An in-order pair has no
    reducing parent. Type I needs k < j <= ell, type II needs i < k < ell; in both cases the
    parent matching is certified to be strictly longer. Sigma is the permutation after the
    swap, not before it; the parent is obtained by undoing the swap.

    Usage:
        >>> transposition_reduces(villanger_pointset(3), (2, 1, 3), 1, 2)
        <TranspositionType.TYPE_I: 'type_I'>
    """
    A, B = split_classes(instance.S)
    m = len(A)
    if not 1 <= i < j <= m:
        raise IndexOutOfRangeError(f"positions ({i}, {j}) outside 1 <= i < j <= {m}")
    _check_permutation(sigma, m)
    if sigma[i - 1] < sigma[j - 1]:
        return TranspositionType.NOT_REDUCING
    k, ell = sigma[j - 1], sigma[i - 1]
    if k < j <= ell:
        kind = TranspositionType.TYPE_I
    elif i < k < ell:
        kind = TranspositionType.TYPE_II
    else:
        return TranspositionType.NOT_REDUCING

    def d(a, b):
        return sqrt_interval(squared_distance(a, b))

    a_i, a_j = A[i - 1], A[j - 1]
    sign = certified_sign(
        lambda: (d(a_i, B[k - 1]) + d(a_j, B[ell - 1])) - (d(a_i, B[ell - 1]) + d(a_j, B[k - 1])),
        start_dps,
        max_dps,
    )
    if sign is None:
        raise PrecisionExhaustedError(f"length change of ({i}, {j}) not certified")
    if sign < 0:
        raise CertificationError(f"{kind.value} transposition ({i}, {j}) does not shorten")
    return kind


def placement_chain(sigma: Sequence[int]) -> list[PlacementStep]:
    """Transpositions leading from the identity to sigma.

    The values 1..m are placed in increasing order; value v travels right by swapping it
    with v + 1, v + 2, ... while the values still to be placed stay sorted.

    Usage:
        >>> [(s.i, s.j) for s in placement_chain((3, 1, 2))]
        [(1, 2), (1, 3)]
    """
    m = len(sigma)
    _check_permutation(sigma, m)
    current = list(range(1, m + 1))
    steps = []
    for value in range(1, m + 1):
        target = sigma.index(value)
        other = value + 1
        while current.index(value) != target:
            i, j = current.index(value), current.index(other)
            before = tuple(current)
            current[i], current[j] = current[j], current[i]
            steps.append(PlacementStep(before, i + 1, j + 1, tuple(current)))
            other += 1
    return steps
