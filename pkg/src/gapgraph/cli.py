"""Command-line interface.

Commands: build an index from a world file, run query batches, generate
worlds, cross-check the engine against the brute-force planner, render SVG
snapshots, and benchmark build/query scaling.

Exit codes: 0 = ran, 1 = input error, 2 = verification mismatch.
"""

from __future__ import annotations

import argparse
import random
import statistics
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from .engine import Query, build_index
from .geometry import RawShape, ingest_world
from .oracle import oracle_feasible
from .render import render_svg
from .store import load_index, save_index
from .worldgen import gen_world
from .worldio import format_world, parse_queries, parse_world


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_world(path: str) -> list[RawShape]:
    try:
        return parse_world(_read(path))
    except OSError as exc:
        raise SystemExit(f"error: {exc}")
    except ValueError as exc:
        raise SystemExit(f"error: {path}: {exc}")


def cmd_build(args: argparse.Namespace) -> int:
    shapes = _load_world(args.world)
    try:
        index = build_index(shapes)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    save_index(index, args.out)
    passable = sum(1 for e in index.edges if e.capacity > 0)
    print(f"obstacles {len(index.obstacles)}")
    print(f"candidates {index.candidate_count}")
    print(f"edges {passable}")
    print(f"regions {index.partition.region_count}")
    print(f"dual-edges {len(index.dual.edges)}")
    return 0


def cmd_query(args: argparse.Namespace) -> int:
    index = load_index(args.index)
    try:
        queries = parse_queries(_read(args.queries))
    except ValueError as exc:
        print(f"error: {args.queries}: {exc}", file=sys.stderr)
        return 1
    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            verdicts = list(pool.map(index.feasible, queries))
    else:
        verdicts = [index.feasible(q) for q in queries]
    for v in verdicts:
        print(v.value)
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        text = gen_world(args.kind, args.n, args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _random_queries(
    rng: random.Random, shapes: list[RawShape], k: int
) -> list[Query]:
    xs = [v for kind, data in shapes for v in ([data[0], data[2]] if kind == "rect" else [p[0] for p in data])]
    ys = [v for kind, data in shapes for v in ([data[1], data[3]] if kind == "rect" else [p[1] for p in data])]
    lo_x, hi_x = (min(xs) - 3, max(xs) + 3) if xs else (-8, 8)
    lo_y, hi_y = (min(ys) - 3, max(ys) + 3) if ys else (-8, 8)
    out = []
    for _ in range(k):
        s = (rng.randint(2 * lo_x, 2 * hi_x), rng.randint(2 * lo_y, 2 * hi_y))
        t = (rng.randint(2 * lo_x, 2 * hi_x), rng.randint(2 * lo_y, 2 * hi_y))
        out.append(Query(s, t, 2 * rng.randint(1, 6)))
    return out


def _minimize(shapes, query, check):
    """Greedily drop obstacles while the engine/oracle disagreement persists."""
    current = list(shapes)
    changed = True
    while changed:
        changed = False
        for k in range(len(current)):
            trial = current[:k] + current[k + 1 :]
            if check(trial, query):
                current = trial
                changed = True
                break
    return current


def cmd_verify(args: argparse.Namespace) -> int:
    shapes = _load_world(args.world)
    rng = random.Random(args.seed)
    if args.queries:
        try:
            queries = parse_queries(_read(args.queries))
        except ValueError as exc:
            print(f"error: {args.queries}: {exc}", file=sys.stderr)
            return 1
    else:
        queries = _random_queries(rng, shapes, args.random)

    def disagrees(shape_subset, query):
        try:
            obs = ingest_world(shape_subset)
        except ValueError:
            return False
        idx = build_index(shape_subset, inject_fault=args.inject_fault)
        return idx.feasible(query) != oracle_feasible(obs, query.s, query.t, query.d)

    index = build_index(shapes, inject_fault=args.inject_fault)
    obstacles = index.obstacles
    agree = 0
    first_bad = None
    for q in queries:
        engine_v = index.feasible(q)
        oracle_v = oracle_feasible(obstacles, q.s, q.t, q.d)
        if engine_v == oracle_v:
            agree += 1
        elif first_bad is None:
            first_bad = (q, engine_v, oracle_v)
    print(f"{agree}/{len(queries)} agree")
    if first_bad is None:
        return 0
    q, engine_v, oracle_v = first_bad
    minimal = _minimize(shapes, q, disagrees)
    with open(args.dump, "w", encoding="ascii") as fh:
        fh.write(f"# engine={engine_v.value} oracle={oracle_v.value}\n")
        fh.write(f"# query halfunits: s={q.s} t={q.t} d={q.d}\n")
        fh.write(format_world(minimal))
    print(f"mismatch: engine={engine_v.value} oracle={oracle_v.value}", file=sys.stderr)
    print(f"minimized reproduction written to {args.dump}", file=sys.stderr)
    return 2


def cmd_render(args: argparse.Namespace) -> int:
    index = load_index(args.index)
    svg = render_svg(
        index,
        show_regions=not args.no_regions,
        show_edges=not args.no_edges,
        show_pathways=args.show_pathways,
    )
    with open(args.out, "w", encoding="ascii") as fh:
        fh.write(svg)
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    rows = []
    for n in args.sizes:
        text = gen_world("uniform", n, args.seed)
        shapes = parse_world(text)
        t0 = time.perf_counter()
        index = build_index(shapes)
        build_s = time.perf_counter() - t0
        rng = random.Random(args.seed + 1)
        queries = _random_queries(rng, shapes, args.queries)
        times = []
        hops = []
        for q in queries:
            q0 = time.perf_counter()
            _, h = index.feasible_with_stats(q)
            times.append((time.perf_counter() - q0) * 1e6)
            hops.append(h)
        dsu_hops = [h for h in hops if h > 0]
        rows.append(
            {
                "n": n,
                "obstacles": len(index.obstacles),
                "candidates": index.candidate_count,
                "edges": sum(1 for e in index.edges if e.capacity > 0),
                "regions": index.partition.region_count,
                "dual_edges": len(index.dual.edges),
                "build_s": round(build_s, 4),
                "query_median_us": round(statistics.median(times), 1),
                "query_p99_us": round(
                    sorted(times)[max(0, int(len(times) * 0.99) - 1)], 1
                ),
                "hops_max": max(hops, default=0),
                "hops_median": int(statistics.median(dsu_hops)) if dsu_hops else 0,
            }
        )
    cols = list(rows[0].keys())
    header = ",".join(cols)
    csv_lines = [header] + [",".join(str(r[c]) for c in cols) for r in rows]
    if args.csv:
        with open(args.csv, "w", encoding="ascii") as fh:
            fh.write("\n".join(csv_lines) + "\n")
    widths = [max(len(c), *(len(str(r[c])) for r in rows)) for c in cols]
    print("  ".join(c.rjust(w) for c, w in zip(cols, widths)))
    for r in rows:
        print("  ".join(str(r[c]).rjust(w) for c, w in zip(cols, widths)))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="gapgraph",
        description="square-robot feasibility queries among rectangular obstacles",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="preprocess a world file into an index")
    p.add_argument("world")
    p.add_argument("-o", "--out", required=True)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("query", help="answer a query file against an index")
    p.add_argument("index")
    p.add_argument("queries")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("gen", help="generate a world file")
    p.add_argument("--kind", choices=("uniform", "cluster", "maze"), default="uniform")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="cross-check engine verdicts against the oracle")
    p.add_argument("world")
    p.add_argument("--queries")
    p.add_argument("--random", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dump", default="gapgraph-repro.txt")
    p.add_argument("--inject-fault", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="render an index to SVG")
    p.add_argument("index")
    p.add_argument("-o", "--out", required=True)
    p.add_argument("--show-pathways", action="store_true")
    p.add_argument("--no-regions", action="store_true")
    p.add_argument("--no-edges", action="store_true")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("bench", help="build/query scaling table")
    p.add_argument("--sizes", type=int, nargs="+", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--queries", type=int, default=300)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_bench)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return 1
        raise


if __name__ == "__main__":
    sys.exit(main())
