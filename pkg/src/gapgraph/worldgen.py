"""Deterministic world generators for tests and benchmarks.

Three kinds: `uniform` scatters boxes over a domain that grows with sqrt(n)
so density stays roughly constant; `cluster` concentrates boxes around a few
hubs; `maze` recursively divides a chamber with unit-thick walls and door
gaps, producing touching, non-disjoint obstacles where feasibility is
non-monotone (spiral-like corridors).  Output is byte-identical per seed.
"""

from __future__ import annotations

import math
import random

from .geometry import RawShape
from .worldio import format_world


def _uniform_shapes(rng: random.Random, n: int) -> list[RawShape]:
    span = max(12, math.ceil(4 * math.sqrt(n)))
    shapes: list[RawShape] = []
    for _ in range(n):
        x1 = rng.randint(0, span)
        y1 = rng.randint(0, span)
        w = rng.randint(1, 8)
        h = rng.randint(1, 8)
        shapes.append(("rect", (x1, y1, x1 + w, y1 + h)))
    return shapes


def _cluster_shapes(rng: random.Random, n: int) -> list[RawShape]:
    span = max(12, math.ceil(4 * math.sqrt(n)))
    hubs = [
        (rng.randint(0, span), rng.randint(0, span))
        for _ in range(max(1, round(math.sqrt(n) / 2)))
    ]
    spread = max(3, span // 10)
    shapes: list[RawShape] = []
    for _ in range(n):
        cx, cy = hubs[rng.randrange(len(hubs))]
        x1 = cx + rng.randint(-spread, spread)
        y1 = cy + rng.randint(-spread, spread)
        w = rng.randint(1, 6)
        h = rng.randint(1, 6)
        shapes.append(("rect", (x1, y1, x1 + w, y1 + h)))
    return shapes


def _maze_shapes(rng: random.Random, n: int) -> list[RawShape]:
    side = max(9, 3 * math.ceil(math.sqrt(n)) + 3)
    walls: list[RawShape] = [
        ("rect", (-1, -1, side + 1, 0)),
        ("rect", (-1, side, side + 1, side + 1)),
        ("rect", (-1, 0, 0, side)),
        ("rect", (side, 0, side + 1, side)),
    ]
    chambers = [(0, 0, side, side)]
    while chambers and len(walls) < n + 8:
        x1, y1, x2, y2 = chambers.pop(rng.randrange(len(chambers)))
        w, h = x2 - x1, y2 - y1
        if max(w, h) < 5:
            continue
        if w >= h:
            wx = rng.randint(x1 + 2, x2 - 3)
            door = rng.randint(y1, y2 - 2)
            dh = rng.randint(1, 2)
            if door > y1:
                walls.append(("rect", (wx, y1, wx + 1, door)))
            if door + dh < y2:
                walls.append(("rect", (wx, door + dh, wx + 1, y2)))
            chambers.append((x1, y1, wx, y2))
            chambers.append((wx + 1, y1, x2, y2))
        else:
            wy = rng.randint(y1 + 2, y2 - 3)
            door = rng.randint(x1, x2 - 2)
            dw = rng.randint(1, 2)
            if door > x1:
                walls.append(("rect", (x1, wy, door, wy + 1)))
            if door + dw < x2:
                walls.append(("rect", (door + dw, wy, x2, wy + 1)))
            chambers.append((x1, y1, x2, wy))
            chambers.append((x1, wy + 1, x2, y2))
    while len(walls) < n:  # top up small mazes with free-standing blocks
        x1 = rng.randint(1, side - 2)
        y1 = rng.randint(1, side - 2)
        walls.append(("rect", (x1, y1, x1 + 1, y1 + 1)))
    return walls[:n]


_KINDS = {
    "uniform": _uniform_shapes,
    "cluster": _cluster_shapes,
    "maze": _maze_shapes,
}


def world_shapes(kind: str, n: int, seed: int) -> list[RawShape]:
    if kind not in _KINDS:
        raise ValueError(f"unknown world kind {kind!r} (have {sorted(_KINDS)})")
    if n <= 0:
        raise ValueError("n must be positive")
    return _KINDS[kind](random.Random(seed), n)


def gen_world(kind: str, n: int, seed: int) -> str:
    return format_world(world_shapes(kind, n, seed))
