"""Rectilinear polygon handling: validation and strip decomposition.

Coordinates here are plain integers in whatever unit the caller uses
(ingestion doubles the resulting rectangles, not this module).
"""

from __future__ import annotations

from typing import Sequence

Point = tuple[int, int]


def polygon_area(vertices: Sequence[Point]) -> int:
    """Exact area by the shoelace formula (positive for counterclockwise)."""
    twice = 0
    n = len(vertices)
    for k in range(n):
        x1, y1 = vertices[k]
        x2, y2 = vertices[(k + 1) % n]
        twice += x1 * y2 - x2 * y1
    if twice % 2:
        raise ValueError("non-integral area; polygon is not rectilinear")
    return twice // 2


def _edges(vertices: Sequence[Point]) -> list[tuple[Point, Point]]:
    n = len(vertices)
    return [(vertices[k], vertices[(k + 1) % n]) for k in range(n)]


def _segments_touch(a: tuple[Point, Point], b: tuple[Point, Point]) -> bool:
    """Whether two axis-aligned closed segments share any point."""
    (ax1, ay1), (ax2, ay2) = a
    (bx1, by1), (bx2, by2) = b
    ax1, ax2 = min(ax1, ax2), max(ax1, ax2)
    ay1, ay2 = min(ay1, ay2), max(ay1, ay2)
    bx1, bx2 = min(bx1, bx2), max(bx1, bx2)
    by1, by2 = min(by1, by2), max(by1, by2)
    return (
        max(ax1, bx1) <= min(ax2, bx2)
        and max(ay1, by1) <= min(ay2, by2)
    )


def validate(vertices: Sequence[Point]) -> None:
    """Reject inputs that are not simple counterclockwise rectilinear rings."""
    n = len(vertices)
    if n < 4:
        raise ValueError("rectilinear polygon needs at least 4 vertices")
    if len(set(vertices)) != n:
        raise ValueError("self-intersection: repeated vertex")
    edges = _edges(vertices)
    for k, ((x1, y1), (x2, y2)) in enumerate(edges):
        if x1 == x2 and y1 == y2:
            raise ValueError(f"degenerate zero-length edge at vertex {k}")
        if x1 != x2 and y1 != y2:
            raise ValueError(f"non-rectilinear edge at vertex {k}")
    for k in range(n):
        horiz_k = edges[k][0][1] == edges[k][1][1]
        horiz_next = edges[(k + 1) % n][0][1] == edges[(k + 1) % n][1][1]
        if horiz_k == horiz_next:
            raise ValueError(f"consecutive collinear edges at vertex {(k + 1) % n}")
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                continue  # adjacent edges share exactly their common vertex
            if _segments_touch(edges[i], edges[j]):
                raise ValueError(f"self-intersection between edges {i} and {j}")
    if polygon_area(vertices) <= 0:
        raise ValueError("polygon must be counterclockwise with positive area")


def decompose(vertices: Sequence[Point]) -> list[tuple[int, int, int, int]]:
    """Cut a simple CCW rectilinear polygon into disjoint rectangles.

    Horizontal strips between consecutive vertex y-coordinates; within a
    strip the crossing vertical edges pair up (even-odd) into maximal runs.
    Output is sorted by (y1, x1); the piece count never exceeds the vertex
    count and the union of the closed pieces is the closed polygon.
    """
    vertices = [tuple(v) for v in vertices]
    validate(vertices)
    vedges = []  # (x, ylo, yhi) for each vertical edge
    for (x1, y1), (x2, y2) in _edges(vertices):
        if x1 == x2:
            vedges.append((x1, min(y1, y2), max(y1, y2)))
    ys = sorted({y for _, y in vertices})
    out: list[tuple[int, int, int, int]] = []
    for ya, yb in zip(ys, ys[1:]):
        xs = sorted(x for x, ylo, yhi in vedges if ylo <= ya and yhi >= yb)
        for xl, xr in zip(xs[0::2], xs[1::2]):
            out.append((xl, ya, xr, yb))
    out.sort(key=lambda r: (r[1], r[0]))
    return out


def point_in_polygon(p: Point, vertices: Sequence[Point]) -> bool:
    """Closed membership test: points on the boundary count as inside.

    The crossing ray is cast at a half-integer height (doubled coordinates)
    so it never grazes a vertex or runs along an edge.
    """
    px, py = p
    for (x1, y1), (x2, y2) in _edges(vertices):
        if x1 == x2:
            if px == x1 and min(y1, y2) <= py <= max(y1, y2):
                return True
        else:
            if py == y1 and min(x1, x2) <= px <= max(x1, x2):
                return True
    ry = 2 * py + 1  # between lattice rows in doubled coordinates
    crossings = 0
    for (x1, y1), (x2, y2) in _edges(vertices):
        if x1 != x2:
            continue
        ylo, yhi = 2 * min(y1, y2), 2 * max(y1, y2)
        if ylo < ry < yhi and x1 > px:
            crossings += 1
    return crossings % 2 == 1
