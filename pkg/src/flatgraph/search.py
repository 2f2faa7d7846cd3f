"""Spanning-tree search (DFS/BFS) and shortest paths over a GraphStore.

The search keeps its visited set and its result in one BST (key = reached
vertex, value = predecessor) and its fringe in one deque of (vertex, pred)
pairs.  Front insertion during exploration gives depth-first order, back
insertion breadth-first; everything else is identical.  A termination count
seeded with n_max * m_max + 1 bounds the loop.  All capacity is claimed when a
search starts; nothing allocates afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from ._kernels import SpanStats
from ._kernels.pyback import explore_step
from .bst import BstView
from .dlist import DequeView
from .heap import BoundedHeap
from .store import GraphStore, StoreError


@dataclass
class SpanResult:
    """Spanning tree (vertex -> predecessor) plus target hit and loop stats."""

    tree: BstView
    found: bool
    stats: SpanStats


@dataclass
class DistResult:
    """Single-source shortest paths; dist[v] is None for unreachable v."""

    src: int
    dist: list
    pred: list


def explore(g: GraphStore, v: int, tree: BstView, fringe: DequeView,
            front: bool = True) -> int:
    """Push v's unreached children onto the fringe; see pyback.explore_step."""
    return explore_step(g, v, tree, fringe, front)


def dfs_span(count, target, g, tree, fringe, backend=None) -> SpanStats:
    """Depth-first spanning loop: exploration pushes to the fringe front."""
    return _kernels.run_span(count, target, g, tree, fringe, True, backend)


def bfs_span(count, target, g, tree, fringe, backend=None) -> SpanStats:
    """Breadth-first spanning loop: exploration pushes to the fringe back."""
    return _kernels.run_span(count, target, g, tree, fringe, False, backend)


def span_from(g: GraphStore, start: int, target: int = 0, mode: str = "dfs",
              backend=None) -> SpanResult:
    """Driver: claim tree and fringe capacity, seed (start, start), search.

    A target of 0 never matches, which forces a full spanning run over
    everything reachable from start.  The root records itself as predecessor.
    """
    if mode not in ("dfs", "bfs"):
        raise StoreError(f"mode must be 'dfs' or 'bfs', got {mode!r}")
    g._require_live(start)
    n, m = g.cfg.n_max, g.cfg.m_max
    tree = BstView.new(n)
    fringe = DequeView.new(n * m + 1)
    fringe.push_back(start, start)
    count = n * m + 1
    run = dfs_span if mode == "dfs" else bfs_span
    stats = run(count, target, g, tree, fringe, backend)
    return SpanResult(tree, tree.exists(target), stats)


def dijkstra(g: GraphStore, src: int) -> DistResult:
    """Single-source shortest paths; edge weights must be >= 1.

    Uses a bounded heap with lazy decrease-key: each improving relaxation
    pushes a fresh entry, stale entries are skipped on pop, so |E| + 1
    capacity suffices.  Ties pop the smaller vertex first, making the
    predecessor tree deterministic.
    """
    g._require_live(src)
    n, m = g.cfg.n_max, g.cfg.m_max
    dist = [None] * (n + 1)
    pred = [0] * (n + 1)
    settled = bytearray(n + 1)
    heap = BoundedHeap(n * m + 1)
    dist[src] = 0
    heap.push(0, src)
    edge, weight, vtx = g.edge, g.weight, g.vtx
    while True:
        entry = heap.pop_min()
        if entry is None:
            break
        d, v = entry
        if settled[v]:
            continue
        settled[v] = 1
        b = vtx[v]
        for slot in range(m):
            t = edge[b + slot]
            if t == 0:
                continue
            w = weight[b + slot]
            if w < 1:
                raise StoreError(
                    f"edge {v}->{t} (slot {slot}) has weight {w}; weights must be >= 1"
                )
            nd = d + w
            if dist[t] is None or nd < dist[t]:
                dist[t] = nd
                pred[t] = v
                heap.push(nd, t)
    return DistResult(src, dist, pred)


def all_pairs(g: GraphStore) -> list:
    """One DistResult per live vertex, in ascending vertex order."""
    return [dijkstra(g, v) for v in g.live_vertices()]
