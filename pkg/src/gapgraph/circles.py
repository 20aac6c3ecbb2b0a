"""Gabriel graph construction for congruent circular obstacles.

A query robot of radius q among circles of shared radius r reduces to a
robot of radius q + 2r among the centers alone, so only the center geometry
matters here.  Capacities are kept as squared center distances to stay
exact for integer or rational inputs.

An edge (i, j) exists iff the closed disc with diameter c_i c_j contains no
other center.  Counting boundary points as witnesses (closed, not open,
disc) is what keeps the graph plane when four or more centers are
cocircular: the diagonals of a square die to its corners instead of
crossing each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

Point = tuple  # (x, y) with int or Fraction entries


@dataclass(frozen=True, slots=True)
class GabrielEdge:
    i: int
    j: int
    sq_capacity: object  # squared center distance (int or Fraction)


def fold_radius(q, r):
    """Effective robot radius among shrunk-to-point obstacles: q + 2r."""
    if q <= 0:
        raise ValueError("robot radius must be positive")
    if r < 0:
        raise ValueError("obstacle radius must be nonnegative")
    return q + 2 * r


def diametral_disc_blocked(a: Point, b: Point, c: Point) -> bool:
    """Whether c lies in the closed disc with diameter segment a-b.

    Evaluated as |a + b - 2c|^2 <= |a - b|^2, exact for ints/rationals.
    """
    ux = a[0] + b[0] - 2 * c[0]
    uy = a[1] + b[1] - 2 * c[1]
    vx = a[0] - b[0]
    vy = a[1] - b[1]
    return ux * ux + uy * uy <= vx * vx + vy * vy


def gabriel_edges(centers: Sequence[Point]) -> list[GabrielEdge]:
    """Naive O(n^3) Gabriel graph over pairwise-distinct centers."""
    pts = [tuple(p) for p in centers]
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate centers")
    n = len(pts)
    out: list[GabrielEdge] = []
    for i in range(n):
        a = pts[i]
        for j in range(i + 1, n):
            b = pts[j]
            if any(
                diametral_disc_blocked(a, b, pts[k])
                for k in range(n)
                if k != i and k != j
            ):
                continue
            dx, dy = a[0] - b[0], a[1] - b[1]
            out.append(GabrielEdge(i, j, dx * dx + dy * dy))
    return out
