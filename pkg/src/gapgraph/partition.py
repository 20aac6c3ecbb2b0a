"""Region partition over a doubled compressed grid, and its dual graph.

The grid stores both coordinate lines and the open intervals between them
as cells (even cell indices are zero-thickness lines, odd are intervals),
so zero-width gap rectangles and flush boundaries need no epsilons.  One
sentinel coordinate beyond each extreme keeps the outermost ring free;
points outside the grid clamp onto that ring, which always belongs to the
unbounded region.

Cells covered by a closed obstacle are walls; cells covered by a surviving
edge rectangle (and not walls) are sealed; the rest flood-fill 4-connectedly
into regions.  The dual graph has one node per region and one capacity-
weighted edge per passable gap whose two probed faces land in distinct
regions.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy import ndimage

from .geometry import Obstacle
from .sweep import AXIS_HORIZONTAL, GapEdge

_CROSS = np.array([[0, 1, 0], [1, 1, 1], [0, 1, 0]], dtype=np.uint8)

WALL = "wall"
SEALED = "sealed"
REGION = "region"


class DualEdge(NamedTuple):
    a: int
    b: int
    capacity: int
    edge_index: int


@dataclass
class DoubledGrid:
    xs: list[int]
    ys: list[int]

    @staticmethod
    def _cell(coords: list[int], v: int) -> int:
        i = bisect_left(coords, v)
        if i == len(coords):
            return 2 * len(coords) - 2  # beyond the top sentinel line
        if coords[i] == v:
            return 2 * i
        if i == 0:
            return 0  # beyond the bottom sentinel line
        return 2 * i - 1

    def cell_x(self, v: int) -> int:
        return self._cell(self.xs, v)

    def cell_y(self, v: int) -> int:
        return self._cell(self.ys, v)

    def line_x(self, v: int) -> int:
        i = bisect_left(self.xs, v)
        assert i < len(self.xs) and self.xs[i] == v, "coordinate not on grid"
        return 2 * i

    def line_y(self, v: int) -> int:
        i = bisect_left(self.ys, v)
        assert i < len(self.ys) and self.ys[i] == v, "coordinate not on grid"
        return 2 * i

    @property
    def shape(self) -> tuple[int, int]:
        return 2 * len(self.xs) - 1, 2 * len(self.ys) - 1


@dataclass
class RegionPartition:
    grid: DoubledGrid
    wall_owner: np.ndarray  # int32 [ix, iy]; -1 = no obstacle
    sealed_owner: np.ndarray  # int32; -1 = no sealed edge
    labels: np.ndarray  # int32; scipy labels, 0 where wall/sealed
    region_count: int

    def locate(self, p: tuple[int, int]) -> tuple[str, int]:
        """(kind, ref) for the cell containing p; O(log n)."""
        ix = self.grid.cell_x(p[0])
        iy = self.grid.cell_y(p[1])
        return self.label_at(ix, iy)

    def label_at(self, ix: int, iy: int) -> tuple[str, int]:
        w = self.wall_owner[ix, iy]
        if w >= 0:
            return WALL, int(w)
        s = self.sealed_owner[ix, iy]
        if s >= 0:
            return SEALED, int(s)
        return REGION, int(self.labels[ix, iy]) - 1

    def region_at(self, ix: int, iy: int) -> int | None:
        if self.wall_owner[ix, iy] >= 0 or self.sealed_owner[ix, iy] >= 0:
            return None
        return int(self.labels[ix, iy]) - 1


def build_partition(
    obstacles: list[Obstacle], edges: list[GapEdge]
) -> RegionPartition:
    """Label the doubled grid: walls, sealed edge rectangles, then regions.

    The unbounded face gets a region id like any other.  When rectangles
    overlap, the later one (higher obstacle id / edge index) owns the cell.
    """
    coords_x: set[int] = set()
    coords_y: set[int] = set()
    for o in obstacles:
        coords_x.update((o.x1, o.x2))
        coords_y.update((o.y1, o.y2))
    for e in edges:
        coords_x.update((e.edge_rect.x1, e.edge_rect.x2))
        coords_y.update((e.edge_rect.y1, e.edge_rect.y2))
    if not coords_x:
        coords_x, coords_y = {0}, {0}
    xs = sorted({min(coords_x) - 2, *coords_x, max(coords_x) + 2})
    ys = sorted({min(coords_y) - 2, *coords_y, max(coords_y) + 2})
    grid = DoubledGrid(xs, ys)

    shape = grid.shape
    wall = np.full(shape, -1, dtype=np.int32)
    sealed = np.full(shape, -1, dtype=np.int32)
    for o in obstacles:
        wall[
            grid.line_x(o.x1) : grid.line_x(o.x2) + 1,
            grid.line_y(o.y1) : grid.line_y(o.y2) + 1,
        ] = o.id
    for k, e in enumerate(edges):
        r = e.edge_rect
        sealed[
            grid.line_x(r.x1) : grid.line_x(r.x2) + 1,
            grid.line_y(r.y1) : grid.line_y(r.y2) + 1,
        ] = k
    sealed[wall >= 0] = -1

    free = (wall < 0) & (sealed < 0)
    labels, count = ndimage.label(free, structure=_CROSS)
    return RegionPartition(grid, wall, sealed, labels.astype(np.int32), int(count))


@dataclass
class DualGraph:
    region_count: int
    edges: list[DualEdge]
    #: gap-edge index -> probed incident regions, passage-axis faces first.
    incident: dict[int, tuple[int, ...]]


def _probe_vertical_face(
    part: RegionPartition, xcell: int, ylo: int, yhi: int
) -> int | None:
    mid = (ylo + yhi) // 2
    r = part.region_at(xcell, mid)
    if r is not None:
        return r
    for yy in range(ylo, yhi + 1):
        r = part.region_at(xcell, yy)
        if r is not None:
            return r
    return None


def _probe_horizontal_face(
    part: RegionPartition, ycell: int, xlo: int, xhi: int
) -> int | None:
    mid = (xlo + xhi) // 2
    r = part.region_at(mid, ycell)
    if r is not None:
        return r
    for xx in range(xlo, xhi + 1):
        r = part.region_at(xx, ycell)
        if r is not None:
            return r
    return None


def build_dual_graph(
    part: RegionPartition, edges: list[GapEdge]
) -> DualGraph:
    """One dual edge per passable gap whose two passage-axis faces probe
    into distinct regions; self-loops and fully blocked faces are dropped.

    The perpendicular faces are probed as well and kept (after the primary
    pair) as extra incident regions for query points that land inside a
    sealed cell.
    """
    dual_edges: list[DualEdge] = []
    incident: dict[int, tuple[int, ...]] = {}
    grid = part.grid
    for k, e in enumerate(edges):
        if e.capacity <= 0:
            continue
        r = e.edge_rect
        cx1, cx2 = grid.line_x(r.x1), grid.line_x(r.x2)
        cy1, cy2 = grid.line_y(r.y1), grid.line_y(r.y2)
        left = _probe_vertical_face(part, cx1 - 1, cy1, cy2)
        right = _probe_vertical_face(part, cx2 + 1, cy1, cy2)
        below = _probe_horizontal_face(part, cy1 - 1, cx1, cx2)
        above = _probe_horizontal_face(part, cy2 + 1, cx1, cx2)
        if e.passage_axis == AXIS_HORIZONTAL:
            primary, secondary = (left, right), (below, above)
        else:
            primary, secondary = (below, above), (left, right)
        probes: tuple[int, ...] = tuple(
            dict.fromkeys(
                reg for reg in (*primary, *secondary) if reg is not None
            )
        )
        if probes:
            incident[k] = probes
        a, b = primary
        if a is not None and b is not None and a != b:
            dual_edges.append(DualEdge(a, b, e.capacity, k))
    return DualGraph(part.region_count, dual_edges, incident)


def seal_links(
    part: RegionPartition, edges: list[GapEdge]
) -> list[tuple[int, int, int]]:
    """Capacity-weighted links of the union graph the query timeline runs on.

    Nodes are region ids (0..R-1) plus one node R+k per gap edge k.  A
    passable seal links to every region its one-cell neighborhood touches
    (at the seal's capacity) and to every other passable seal whose gap
    rectangle it overlaps or abuts along a segment (at the smaller of the
    two capacities): a robot crossing from one gap rectangle into another
    sits in both at once, so both gaps bound it.  Rectangles meeting only
    at a corner point do not link; a point contact can pinch the robot.

    Probe-based region pairs need no separate links: a region-seal-region
    path carries exactly the seal's capacity.
    """
    rc = part.region_count
    wall, sealed, labels = part.wall_owner, part.sealed_owner, part.labels
    grid = part.grid
    found: dict[tuple[int, int], int] = {}
    for k, e in enumerate(edges):
        if e.capacity <= 0:
            continue
        r = e.edge_rect
        cx1, cx2 = grid.line_x(r.x1), grid.line_x(r.x2)
        cy1, cy2 = grid.line_y(r.y1), grid.line_y(r.y2)
        # Four one-cell-out face strips (diagonal corners excluded) plus the
        # rectangle's own cells, which overlapping seals may own.
        strips = (
            (slice(cx1 - 1, cx1), slice(cy1, cy2 + 1)),
            (slice(cx2 + 1, cx2 + 2), slice(cy1, cy2 + 1)),
            (slice(cx1, cx2 + 1), slice(cy1 - 1, cy1)),
            (slice(cx1, cx2 + 1), slice(cy2 + 1, cy2 + 2)),
            (slice(cx1, cx2 + 1), slice(cy1, cy2 + 1)),
        )
        for sx, sy in strips:
            walls = wall[sx, sy]
            seals = sealed[sx, sy]
            free = (walls < 0) & (seals < 0)
            if free.any():
                for reg in np.unique(labels[sx, sy][free]).tolist():
                    found.setdefault((reg - 1, rc + k), e.capacity)
            for o in np.unique(seals[(seals >= 0) & (walls < 0)]).tolist():
                if o == k or edges[o].capacity <= 0:
                    continue
                f = edges[o].edge_rect
                ox = min(r.x2, f.x2) - max(r.x1, f.x1)
                oy = min(r.y2, f.y2) - max(r.y1, f.y1)
                if ox == 0 and oy == 0:
                    continue
                key = (rc + min(k, o), rc + max(k, o))
                found.setdefault(key, min(e.capacity, edges[o].capacity))
    return sorted((a, b, w) for (a, b), w in found.items())
