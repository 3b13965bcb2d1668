"""Utilities for drawing instances as SVG figures."""
from fractions import Fraction
from itertools import combinations
from typing import Optional

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402 pylint: disable=wrong-import-position

from crossing_families.constructions import Instance  # noqa: E402
from crossing_families.geom_core import (  # noqa: E402
    Elbow,
    Point,
    segment_intersection_point,
    to_fraction,
)

DEFAULT_PADDING = Fraction(1, 20)
DEFAULT_POINT_SIZE = 16
SVG_HASH_SALT = "crossing-families"


def _edges(instance: Instance) -> tuple[list[list], Optional[int]]:
    """Edge groups, one per family member plus one for the cycle, and the cycle group index."""
    groups = []
    if instance.family is not None:
        groups.extend(member.edges for member in instance.family.members)
    cycle_group = None
    if instance.cycle is not None:
        cycle_group = len(groups)
        groups.append(instance.cycle.segments(instance.S))
    return groups, cycle_group


def _crossing_points(groups: list[list], cycle_group: Optional[int]) -> list[Point]:
    """Crossings between edges of different groups, and between edges of the cycle."""
    marks = set()
    segments = []
    for group_index, group in enumerate(groups):
        for edge in group:
            for leg in edge.legs if isinstance(edge, Elbow) else (edge,):
                segments.append((group_index, leg))
    for (g, s), (h, t) in combinations(segments, 2):
        if g == h != cycle_group:
            continue
        point = segment_intersection_point(s, t)
        if point is not None:
            marks.add(point)
    return sorted(marks)


def _wedge_segments(instance: Instance, low: Point, high: Point) -> list[tuple[Point, Point]]:
    """Clip the stored wedge lines to the drawing box."""
    apex = instance.parameters.get("wedge_apex")
    lines = instance.parameters.get("wedge_lines")
    if not apex or not lines:
        return []
    segments = []
    for a, b, c in ([to_fraction(v) for v in line] for line in lines):
        if b != 0:
            ends = [Point(x, (c - a * x) / b) for x in (low.x, high.x)]
        else:
            ends = [Point(c / a, y) for y in (low.y, high.y)]
        segments.append((ends[0], ends[1]))
    return segments


def render_instance(
    instance: Instance,
    path: str,
    mark_crossings: bool = True,
    padding: Fraction = DEFAULT_PADDING,
    point_size: float = DEFAULT_POINT_SIZE,
    title: Optional[str] = None,
) -> int:
    """Draws points, family members, the cycle, wedge lines and crossing marks to an SVG file.

    Args:
        instance: instance to draw
        path: output file
        mark_crossings: mark every crossing point with a cross
        padding: fraction of the bounding box added on each side
        point_size: marker area of the points
        title: optional figure title

    Returns:
        number of crossing marks drawn

    Usage:
        >>> render_instance(ham_cycle_max_odd(2), "pentagram.svg")
    """
    plt.rcParams["svg.hashsalt"] = SVG_HASH_SALT
    fig, ax = plt.subplots(figsize=(6, 6))

    S = instance.S
    xs = [p.x for p in S.points]
    ys = [p.y for p in S.points]
    width = max(max(xs) - min(xs), max(ys) - min(ys), Fraction(1))
    pad = Fraction(padding) * width
    low = Point(min(xs) - pad, min(ys) - pad)
    high = Point(max(xs) + pad, max(ys) + pad)

    for a, b in _wedge_segments(instance, low, high):
        ax.plot([float(a.x), float(b.x)], [float(a.y), float(b.y)], "--", color="grey", lw=0.8)

    groups, cycle_group = _edges(instance)
    colors = plt.cm.tab10.colors  # pylint: disable=no-member
    for index, group in enumerate(groups):
        color = colors[index % len(colors)]
        for edge in group:
            if isinstance(edge, Elbow):
                corners = [edge.anchor_vertical, edge.corner, edge.anchor_horizontal]
            else:
                corners = [edge.a, edge.b]
            ax.plot([float(p.x) for p in corners], [float(p.y) for p in corners], color=color)

    marks = _crossing_points(groups, cycle_group) if mark_crossings else []
    if marks:
        ax.scatter(
            [float(p.x) for p in marks], [float(p.y) for p in marks], marker="x", color="red"
        )

    ax.scatter([float(x) for x in xs], [float(y) for y in ys], s=point_size, color="black")
    for i, p in enumerate(S.points):
        if S.labels is not None:
            ax.annotate(S.label(i), (float(p.x), float(p.y)), fontsize=6)

    ax.set_xlim(float(low.x), float(high.x))
    ax.set_ylim(float(low.y), float(high.y))
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
    return len(marks)
