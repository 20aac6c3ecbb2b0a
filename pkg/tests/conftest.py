"""Shared test helpers: random worlds and random rectilinear polygons."""

from __future__ import annotations

import random

from gapgraph.geometry import Obstacle, RawShape, ingest_world


def random_world(rng: random.Random, n: int, span: int = 18) -> list[RawShape]:
    shapes: list[RawShape] = []
    for _ in range(n):
        x1 = rng.randint(0, span)
        y1 = rng.randint(0, span)
        shapes.append(("rect", (x1, y1, x1 + rng.randint(1, 6), y1 + rng.randint(1, 6))))
    return shapes


def random_obstacles(rng: random.Random, n: int, span: int = 18) -> list[Obstacle]:
    return ingest_world(random_world(rng, n, span))


def _trace_boundary(cells: set[tuple[int, int]]) -> list[tuple[int, int]] | None:
    """CCW boundary of a polyomino; None when pinched at a corner point
    or when the complement leaves a hole (second boundary loop)."""
    step: dict[tuple[int, int], tuple[int, int]] = {}
    for x, y in cells:
        if (x, y - 1) not in cells:
            if (x, y) in step:
                return None
            step[(x, y)] = (x + 1, y)
        if (x + 1, y) not in cells:
            if (x + 1, y) in step:
                return None
            step[(x + 1, y)] = (x + 1, y + 1)
        if (x, y + 1) not in cells:
            if (x + 1, y + 1) in step:
                return None
            step[(x + 1, y + 1)] = (x, y + 1)
        if (x - 1, y) not in cells:
            if (x, y + 1) in step:
                return None
            step[(x, y + 1)] = (x, y)
    start = min(step)
    loop = [start]
    cur = step[start]
    while cur != start:
        loop.append(cur)
        cur = step[cur]
    if len(loop) != len(step):
        return None  # more than one boundary loop: a hole
    verts = []
    m = len(loop)
    for k in range(m):
        (ax, ay), (bx, by), (cx, cy) = loop[k - 1], loop[k], loop[(k + 1) % m]
        if (bx - ax, by - ay) != (cx - bx, cy - by):
            verts.append((bx, by))
    return verts


def random_rectilinear_polygon(
    rng: random.Random, max_cells: int = 12
) -> list[tuple[int, int]]:
    """Random simple CCW rectilinear polygon grown as a polyomino.

    Growth rejects cells that would touch the shape only at a corner, and
    shapes whose boundary is pinched or has holes are regenerated.
    """
    while True:
        cells = {(0, 0)}
        target = rng.randint(1, max_cells)
        tries = 0
        while len(cells) < target and tries < 200:
            tries += 1
            x, y = rng.choice(sorted(cells))
            dx, dy = rng.choice(((1, 0), (-1, 0), (0, 1), (0, -1)))
            cand = (x + dx, y + dy)
            if cand in cells:
                continue
            cx, cy = cand
            pinch = False
            for ox, oy in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
                diag = (cx + ox, cy + oy)
                if diag in cells and (cx + ox, cy) not in cells and (cx, cy + oy) not in cells:
                    pinch = True
                    break
            if not pinch:
                cells.add(cand)
        verts = _trace_boundary(cells)
        if verts is not None:
            return verts
