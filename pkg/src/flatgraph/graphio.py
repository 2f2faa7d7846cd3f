"""Line-oriented graph file format, loader/saver, and the random generator.

Format (ASCII, LF endings, decimal integers, ``#`` starts a comment):

    graph <n_max> <m_max>          header, exactly once, first
    v <index> <data>               one per live vertex
    e <src> <slot> <dst> <weight>  one per edge; absent slots stay null

Loading then saving round-trips exactly at the abstraction level (same live
set, same adjacency).  The generator is deterministic per seed: every vertex
live, each slot null with probability 0.25, otherwise a uniform target with
weight uniform in [1, 100].
"""

from __future__ import annotations

import random

import numpy as np

from .store import GraphStore, StoreConfig, store_new

NULL_SLOT_P = 0.25
MAX_WEIGHT = 100


class GraphFileError(ValueError):
    """Malformed graph file; carries the offending line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _ints(fields, line):
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise GraphFileError(f"expected integers, got {fields!r}", line) from None


def load_graph(path) -> GraphStore:
    with open(path, "r", encoding="ascii") as fh:
        lines = fh.read().splitlines()

    store = None
    n = m = 0
    seen_edge = set()
    for lineno, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        fields = text.split()
        tag, rest = fields[0], fields[1:]
        if store is None:
            if tag != "graph" or len(rest) != 2:
                raise GraphFileError("expected header 'graph <n_max> <m_max>'", lineno)
            n, m = _ints(rest, lineno)
            try:
                store = store_new(StoreConfig(n, m))
            except Exception as exc:
                raise GraphFileError(str(exc), lineno) from None
            # Clear the initial free-chain links; the chain is rebuilt below
            # once the live set is known.
            np.frombuffer(store.edge, dtype=np.int64)[:] = 0
        elif tag == "graph":
            raise GraphFileError("duplicate header", lineno)
        elif tag == "v":
            if len(rest) != 2:
                raise GraphFileError("expected 'v <index> <data>'", lineno)
            v, d = _ints(rest, lineno)
            if not (1 <= v <= n):
                raise GraphFileError(f"vertex {v} outside [1, n_max={n}]", lineno)
            if d < 0:
                raise GraphFileError(f"vertex data {d} must be non-negative", lineno)
            if store.vtx[v] != 0:
                raise GraphFileError(f"duplicate vertex record for {v}", lineno)
            store.vtx[v] = store.block_base(v)
            store.data[v] = d
            store.vcount += 1
        elif tag == "e":
            if len(rest) != 4:
                raise GraphFileError("expected 'e <src> <slot> <dst> <weight>'", lineno)
            src, slot, dst, w = _ints(rest, lineno)
            if not (1 <= src <= n) or store.vtx[src] == 0:
                raise GraphFileError(f"edge source {src} is not a live vertex", lineno)
            if not (0 <= slot < m):
                raise GraphFileError(f"slot {slot} outside [0, m_max={m})", lineno)
            if not (0 <= dst <= n):
                raise GraphFileError(f"edge target {dst} outside [0, n_max={n}]", lineno)
            if dst != 0 and store.vtx[dst] == 0:
                raise GraphFileError(f"edge target {dst} is not a live vertex", lineno)
            if w < 0:
                raise GraphFileError(f"weight {w} must be non-negative", lineno)
            if (src, slot) in seen_edge:
                raise GraphFileError(f"duplicate edge record for ({src}, {slot})", lineno)
            seen_edge.add((src, slot))
            b = store.vtx[src]
            store.edge[b + slot] = dst
            store.weight[b + slot] = w
        else:
            raise GraphFileError(f"unknown record type {tag!r}", lineno)
    if store is None:
        raise GraphFileError("empty file: missing 'graph' header")
    store.rebuild_free_chain()
    return store


def save_graph(store: GraphStore, path):
    lines = [f"graph {store.cfg.n_max} {store.cfg.m_max}"]
    m = store.cfg.m_max
    live = store.live_vertices()
    for v in live:
        lines.append(f"v {v} {store.data[v]}")
    for v in live:
        b = store.vtx[v]
        for slot in range(m):
            dst = store.edge[b + slot]
            if dst != 0:
                lines.append(f"e {v} {slot} {dst} {store.weight[b + slot]}")
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def random_graph(nodes: int, edges_per_vertex: int, seed: int) -> GraphStore:
    """Uniform random graph, deterministic per seed, all vertices live."""
    store = store_new(StoreConfig(nodes, edges_per_vertex))
    n, m = nodes, edges_per_vertex
    vtx = np.frombuffer(store.vtx, dtype=np.int64)
    np.frombuffer(store.edge, dtype=np.int64)[:] = 0
    vtx[1:] = (np.arange(1, n + 1, dtype=np.int64) - 1) * m + 1
    store.vcount = n
    store.free_hd = 0
    rng = random.Random(seed)
    rnd, randint = rng.random, rng.randint
    edge, weight = store.edge, store.weight
    i = 1
    for _ in range(n):
        for _ in range(m):
            if rnd() >= NULL_SLOT_P:
                edge[i] = randint(1, n)
                weight[i] = randint(1, MAX_WEIGHT)
            i += 1
    return store
