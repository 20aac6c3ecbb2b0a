"""Versioned plain-text serialization of a FeasibilityIndex.

The dump is complete: obstacles, gap edges, grid coordinates, run-length
encoded cell owners and region labels, dual graph, union-graph links, and
the DSU's parent/timestamp/rank arrays.  Loading rebuilds the index without
re-running any geometry, and a reloaded index answers every query exactly
like the original.  The text is deterministic for a given index.
"""

from __future__ import annotations

import numpy as np

from .engine import FeasibilityIndex
from .geometry import Obstacle, Rect
from .partition import DoubledGrid, DualEdge, DualGraph, RegionPartition
from .sweep import GapEdge

FORMAT_TAG = "gapgraph-index"
FORMAT_VERSION = 1


def _rle(array: np.ndarray) -> list[int]:
    flat = np.asarray(array).ravel()
    if flat.size == 0:
        return []
    breaks = np.flatnonzero(np.diff(flat)) + 1
    starts = np.concatenate(([0], breaks))
    ends = np.concatenate((breaks, [flat.size]))
    out: list[int] = []
    for s, e in zip(starts.tolist(), ends.tolist()):
        out.extend((e - s, int(flat[s])))
    return out


def _unrle(values: list[int], shape: tuple[int, int]) -> np.ndarray:
    counts = values[0::2]
    vals = values[1::2]
    flat = np.repeat(np.array(vals, dtype=np.int32), counts)
    return flat.reshape(shape)


def save_index(index: FeasibilityIndex, path: str) -> None:
    part = index.partition
    lines: list[str] = [f"{FORMAT_TAG} {FORMAT_VERSION}"]
    lines.append(f"fault {int(index.fault)}")
    lines.append(f"candidates {index.candidate_count}")
    lines.append(f"obstacles {len(index.obstacles)}")
    for o in index.obstacles:
        lines.append(f"{o.id} {o.x1} {o.y1} {o.x2} {o.y2}")
    lines.append(f"edges {len(index.edges)}")
    for e in index.edges:
        p = e.pathway
        pw = f"{p.x1} {p.y1} {p.x2} {p.y2}" if p is not None else "- - - -"
        r = e.edge_rect
        lines.append(
            f"{e.i} {e.j} {e.capacity} {e.kind} {e.passage_axis} "
            f"{r.x1} {r.y1} {r.x2} {r.y2} {pw}"
        )
    lines.append("gridx " + " ".join(str(v) for v in part.grid.xs))
    lines.append("gridy " + " ".join(str(v) for v in part.grid.ys))
    lines.append("wall " + " ".join(str(v) for v in _rle(part.wall_owner)))
    lines.append("sealed " + " ".join(str(v) for v in _rle(part.sealed_owner)))
    lines.append("labels " + " ".join(str(v) for v in _rle(part.labels)))
    lines.append(f"regions {part.region_count}")
    lines.append(f"dual {len(index.dual.edges)}")
    for de in index.dual.edges:
        lines.append(f"{de.a} {de.b} {de.capacity} {de.edge_index}")
    lines.append(f"incident {len(index.dual.incident)}")
    for k in sorted(index.dual.incident):
        regs = " ".join(str(r) for r in index.dual.incident[k])
        lines.append(f"{k} {regs}")
    lines.append(f"links {len(index.links)}")
    for a, b, cap in index.links:
        lines.append(f"{a} {b} {cap}")
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def load_index(path: str) -> FeasibilityIndex:
    with open(path, encoding="ascii") as fh:
        lines = fh.read().splitlines()
    pos = 0

    def take() -> list[str]:
        nonlocal pos
        parts = lines[pos].split()
        pos += 1
        return parts

    tag = take()
    if tag[0] != FORMAT_TAG or int(tag[1]) != FORMAT_VERSION:
        raise ValueError(f"not a {FORMAT_TAG} v{FORMAT_VERSION} file")
    fault = bool(int(take()[1]))
    candidate_count = int(take()[1])

    n = int(take()[1])
    obstacles = []
    for _ in range(n):
        oid, x1, y1, x2, y2 = (int(v) for v in take())
        obstacles.append(Obstacle(oid, x1, y1, x2, y2))

    m = int(take()[1])
    edges = []
    for _ in range(m):
        parts = take()
        i, j, cap = int(parts[0]), int(parts[1]), int(parts[2])
        kind, axis = parts[3], parts[4]
        rect = Rect(*(int(v) for v in parts[5:9]))
        pathway = None if parts[9] == "-" else Rect(*(int(v) for v in parts[9:13]))
        edges.append(GapEdge(i, j, cap, rect, pathway, kind, axis))

    xs = [int(v) for v in take()[1:]]
    ys = [int(v) for v in take()[1:]]
    grid = DoubledGrid(xs, ys)
    shape = grid.shape
    wall = _unrle([int(v) for v in take()[1:]], shape)
    sealed = _unrle([int(v) for v in take()[1:]], shape)
    labels = _unrle([int(v) for v in take()[1:]], shape)
    region_count = int(take()[1])
    part = RegionPartition(grid, wall, sealed, labels, region_count)

    k = int(take()[1])
    dual_edges = [DualEdge(*(int(v) for v in take())) for _ in range(k)]
    inc_count = int(take()[1])
    incident = {}
    for _ in range(inc_count):
        vals = [int(v) for v in take()]
        incident[vals[0]] = tuple(vals[1:])
    dual = DualGraph(region_count, dual_edges, incident)

    nlinks = int(take()[1])
    links = [tuple(int(v) for v in take()) for _ in range(nlinks)]

    return FeasibilityIndex(
        obstacles=obstacles,
        edges=edges,
        candidate_count=candidate_count,
        partition=part,
        dual=dual,
        links=links,
        fault=fault,
    )
