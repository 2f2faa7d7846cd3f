"""Command-line front door: generate, run, audit, and benchmark graphs.

Exit codes: 0 success (or target found), 1 target not found, 2 usage error,
3 data error (bad file, dead vertex, capacity problem).
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time

from . import _kernels
from .bst import BstView
from .dlist import DequeView
from .graphio import GraphFileError, load_graph, random_graph, save_graph
from .search import all_pairs, dfs_span, bfs_span, dijkstra, span_from
from .store import CapacityError, StoreError

EXIT_OK = 0
EXIT_NOT_FOUND = 1
EXIT_USAGE = 2
EXIT_DATA = 3


def _emit(lines, out_path):
    text = "\n".join(lines) + "\n" if lines else ""
    if out_path:
        with open(out_path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    g = random_graph(args.nodes, args.edges_per_vertex, args.seed)
    save_graph(g, args.out)
    return EXIT_OK


def cmd_run(args) -> int:
    g = load_graph(args.graph)
    if args.algorithm in ("dfs", "bfs"):
        res = span_from(g, args.start, args.target, mode=args.algorithm,
                        backend=args.backend)
        _emit([f"{v} {p}" for v, p in res.tree.inorder()], args.out)
        if args.target != 0:
            return EXIT_OK if res.found else EXIT_NOT_FOUND
        return EXIT_OK
    if args.algorithm == "dijkstra":
        res = dijkstra(g, args.start)
        lines = []
        for v in g.live_vertices():
            if res.dist[v] is None:
                lines.append(f"{v} - 0")
            else:
                lines.append(f"{v} {res.dist[v]} {res.pred[v]}")
        _emit(lines, args.out)
        return EXIT_OK
    # apsp
    lines = []
    for res in all_pairs(g):
        for v in g.live_vertices():
            if res.dist[v] is None:
                lines.append(f"{res.src} {v} - 0")
            else:
                lines.append(f"{res.src} {v} {res.dist[v]} {res.pred[v]}")
    _emit(lines, args.out)
    return EXIT_OK


def cmd_audit(args) -> int:
    g = load_graph(args.graph)
    problems = g.audit()
    if problems:
        for p in problems:
            print(p)
        return EXIT_DATA
    print("clean")
    return EXIT_OK


def cmd_bench(args) -> int:
    """Full spanning runs (bogus target 0) from vertex 1, timed per repetition."""
    g = random_graph(args.nodes, args.edges_per_vertex, args.seed)
    lengths_before = g.array_lengths()
    n, m = g.cfg.n_max, g.cfg.m_max
    run = dfs_span if args.mode == "dfs" else bfs_span
    backends = (_kernels.available_backends() if args.backend == "both"
                else (args.backend or _kernels.default_backend(),))
    grown = False
    last_tree = None
    for backend in backends:
        print(f"backend: {backend}")
        times = []
        for rep in range(1, args.reps + 1):
            t0 = time.perf_counter()
            tree = BstView.new(n)
            fringe = DequeView.new(n * m + 1)
            fringe.push_back(1, 1)
            stats = run(n * m + 1, 0, g, tree, fringe, backend=backend)
            dt = time.perf_counter() - t0
            times.append(dt)
            print(f"run {rep}: {dt:.3f} s  tree={len(tree)}  "
                  f"fringe_peak={stats.fringe_peak}")
            if (tree.store.array_lengths()
                    != tuple([n + 1] * 3 + [2 * n + 1] * 2)):
                grown = True
            fn = fringe.store.cfg.n_max
            if (fringe.store.array_lengths()
                    != tuple([fn + 1] * 3 + [2 * fn + 1] * 2)):
                grown = True
            last_tree = tree
        print(f"median: {statistics.median(times):.3f} s")
    problems = g.audit() + (last_tree.audit() if last_tree is not None else [])
    if problems:
        for p in problems:
            print(p)
        print("audit: FAILED")
        return EXIT_DATA
    print("audit: clean")
    if g.array_lengths() != lengths_before or grown:
        print("array growth: DETECTED")
        return EXIT_DATA
    print("array growth: none")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flatgraph",
        description="Fixed-capacity array-based graphs: generate, search, "
                    "audit, benchmark.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a random graph file")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--edges-per-vertex", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("run", help="run an algorithm over a graph file")
    p.add_argument("algorithm", choices=["dfs", "bfs", "dijkstra", "apsp"])
    p.add_argument("graph")
    p.add_argument("--start", type=int, default=1)
    p.add_argument("--target", type=int, default=0,
                   help="0 is the bogus target: span everything reachable")
    p.add_argument("--out", default=None)
    p.add_argument("--backend", choices=["c", "py"], default=None)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("audit", help="check every store invariant of a graph file")
    p.add_argument("graph")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("bench", help="time full spanning runs at scale")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--edges-per-vertex", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--mode", choices=["dfs", "bfs"], default="dfs")
    p.add_argument("--backend", choices=["c", "py", "both"], default=None)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphFileError, StoreError, CapacityError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
