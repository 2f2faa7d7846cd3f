"""Unbounded functional reference models and the differential-test harness.

The array-backed structures are checked against ordinary Python models: a dict
for the BST, collections.deque for the pair deque, a sorted list for the heap,
and set/dict graph algorithms (reachability, hop depths, Floyd-Warshall, a
reference Dijkstra) for the searches.  Abstraction functions map a well-formed
store to its model; the harness replays random workloads on both sides and
reports the first divergence.  Nothing in this module touches the store
internals beyond the public observers.
"""

from __future__ import annotations

import heapq
import random
from collections import deque as _pydeque
from dataclasses import dataclass

from .bst import BstView
from .dlist import DequeView
from .heap import BoundedHeap
from .store import GraphStore


class AuditError(RuntimeError):
    """Abstraction was refused because the store fails its audit."""


# -- abstraction functions ------------------------------------------------

def _require_clean(problems):
    if problems:
        raise AuditError("refusing to abstract a store failing audit: " + problems[0])


def abstract_bst(t: BstView) -> dict:
    """Ordered key -> value map holding exactly the tree's entries."""
    _require_clean(t.audit())
    return dict(t.inorder())


def abstract_deque(d: DequeView) -> list:
    """Front-to-back list of (vertex, pred) pairs."""
    _require_clean(d.audit())
    s = d.store
    out = []
    node = s.vhd
    while node != 0:
        out.append((s.key[node], s.data[node]))
        node = s.edge[s.vtx[node] + 1]
    return out


def abstract_graph(g: GraphStore) -> dict:
    """vertex -> [(target, weight), ...] in slot order, null edges skipped."""
    _require_clean(g.audit())
    m = g.cfg.m_max
    adj = {}
    for v in g.live_vertices():
        b = g.vtx[v]
        adj[v] = [(g.edge[b + s], g.weight[b + s])
                  for s in range(m) if g.edge[b + s] != 0]
    return adj


# -- graph oracles --------------------------------------------------------

def oracle_reach(adj: dict, start: int) -> set:
    """Vertices reachable from start (set-based worklist, order-free)."""
    seen = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        for t, _ in adj.get(v, ()):
            if t not in seen:
                seen.add(t)
                todo.append(t)
    return seen

def oracle_bfs_depth(adj: dict, start: int) -> dict:
    """vertex -> hop distance from start, for every reachable vertex."""
    depth = {start: 0}
    queue = _pydeque([start])
    while queue:
        v = queue.popleft()
        for t, _ in adj.get(v, ()):
            if t not in depth:
                depth[t] = depth[v] + 1
                queue.append(t)
    return depth


def oracle_apsp(adj: dict) -> dict:
    """Floyd-Warshall exact distances: u -> v -> total weight or None."""
    verts = sorted(adj)
    dist = {u: {v: (0 if u == v else None) for v in verts} for u in verts}
    for u in verts:
        row = dist[u]
        for t, w in adj[u]:
            if row[t] is None or w < row[t]:
                if u != t:
                    row[t] = w
    for k in verts:
        dk = dist[k]
        for i in verts:
            dik = dist[i][k]
            if dik is None:
                continue
            row = dist[i]
            for j in verts:
                dkj = dk[j]
                if dkj is None:
                    continue
                nd = dik + dkj
                if row[j] is None or nd < row[j]:
                    row[j] = nd
    return dist


def oracle_span(adj: dict, start: int, mode: str = "dfs") -> dict:
    """Reference spanning tree (vertex -> predecessor) with the pinned order.

    Children are scanned in ascending slot order; DFS pushes each child to the
    fringe front as encountered (so the highest-slot child is explored first),
    BFS appends to the back.  The root records itself as predecessor.
    """
    tree = {}
    fringe = _pydeque([(start, start)])
    while fringe:
        v, vpred = fringe.popleft()
        if v in tree:
            continue
        tree[v] = vpred
        children = [(t, v) for t, _ in adj.get(v, ()) if t not in tree]
        if mode == "dfs":
            fringe.extendleft(children)
        else:
            fringe.extend(children)
    return tree


def oracle_dijkstra(adj: dict, src: int):
    """Reference shortest paths: (dist dict, pred dict) over reachable vertices.

    Mirrors the production tie-break (smaller vertex index pops first on equal
    distance) so predecessor trees are comparable byte for byte.
    """
    dist = {src: 0}
    pred = {src: 0}
    settled = set()
    heap = [(0, src)]
    while heap:
        d, v = heapq.heappop(heap)
        if v in settled:
            continue
        settled.add(v)
        for t, w in adj.get(v, ()):
            nd = d + w
            if t not in dist or nd < dist[t]:
                dist[t] = nd
                pred[t] = v
                heapq.heappush(heap, (nd, t))
    return dist, pred


# -- differential harness -------------------------------------------------

@dataclass
class DiffReport:
    structure: str
    seed: int
    steps: int
    ok: bool
    failure: str | None = None

    def __str__(self):
        if self.ok:
            return (f"structure={self.structure} seed={self.seed} "
                    f"ops={self.steps} result=ok")
        return (f"structure={self.structure} seed={self.seed} "
                f"result=divergence {self.failure}")


def _diff_bst(rng, n_ops, impl, key_range, abstract_every):
    model = {}
    for i in range(n_ops):
        r = rng.random()
        k = rng.randint(1, key_range)
        if r < 0.40:
            v = rng.randint(1, 10**6)
            op = f"insert({k},{v})"
            impl.insert(k, v)
            model[k] = v
        elif r < 0.70:
            op = f"get({k})"
            got, want = impl.get(k), model.get(k, 0)
            if got != want:
                return i, op, want, got
        elif r < 0.85:
            op = f"exists({k})"
            got, want = impl.exists(k), k in model
            if got != want:
                return i, op, want, got
        else:
            op = f"delete({k})"
            impl.delete(k)
            model.pop(k, None)
        if len(impl) != len(model):
            return i, op, f"len {len(model)}", f"len {len(impl)}"
        if (i + 1) % abstract_every == 0:
            if abstract_bst(impl) != model:
                return i, op, "abstraction == model map", "differs"
    return None


def _diff_deque(rng, n_ops, impl, abstract_every):
    model = _pydeque()
    cap = impl.store.cfg.n_max
    for i in range(n_ops):
        r = rng.random()
        v, vp = rng.randint(1, 99), rng.randint(1, 99)
        if len(impl) == cap and r < 0.60:
            r = 1.0  # full: turn pushes into pops
        if r < 0.30:
            op = f"push_front({v},{vp})"
            impl.push_front(v, vp)
            model.appendleft((v, vp))
        elif r < 0.60:
            op = f"push_back({v},{vp})"
            impl.push_back(v, vp)
            model.append((v, vp))
        elif r < 0.75:
            op = "pop_front()"
            got = impl.pop_front()
            want = model.popleft() if model else None
            if got != want:
                return i, op, want, got
        elif r < 0.90:
            op = "pop_back()"
            got = impl.pop_back()
            want = model.pop() if model else None
            if got != want:
                return i, op, want, got
        else:
            op = "peek_front()"
            got = impl.peek_front()
            want = model[0] if model else None
            if got != want:
                return i, op, want, got
        if len(impl) != len(model):
            return i, op, f"len {len(model)}", f"len {len(impl)}"
        if (i + 1) % abstract_every == 0:
            if abstract_deque(impl) != list(model):
                return i, op, "abstraction == model sequence", "differs"
    return None


def _diff_heap(rng, n_ops, impl, abstract_every):
    model = []
    cap = impl.cap
    for i in range(n_ops):
        r = rng.random()
        if len(impl) == cap:
            r = 1.0
        if r < 0.60:
            p, v = rng.randint(0, 99), rng.randint(1, 999)
            op = f"push({p},{v})"
            impl.push(p, v)
            model.append((p, v))
            model.sort()
        else:
            op = "pop_min()"
            got = impl.pop_min()
            want = model.pop(0) if model else None
            if got != want:
                return i, op, want, got
        if len(impl) != len(model):
            return i, op, f"len {len(model)}", f"len {len(impl)}"
        if (i + 1) % abstract_every == 0:
            if impl.items() != model:
                return i, op, "contents == model multiset", "differs"
    return None


def diff_run(structure: str, n_ops: int, seed: int, impl=None,
             key_range: int = 200, cap: int = 512,
             abstract_every: int = 1) -> DiffReport:
    """Replay a random workload on a structure and its model.

    Returns a report describing success or the first divergence (step index,
    operation, expected, actual).  Identical seeds give identical workloads
    and byte-identical reports.  Pass ``impl`` to test a pre-built (or
    deliberately broken) structure instance.
    """
    rng = random.Random(seed)
    if structure == "bst":
        impl = impl if impl is not None else BstView.new(key_range)
        hit = _diff_bst(rng, n_ops, impl, key_range, abstract_every)
    elif structure == "deque":
        impl = impl if impl is not None else DequeView.new(cap)
        hit = _diff_deque(rng, n_ops, impl, abstract_every)
    elif structure == "heap":
        impl = impl if impl is not None else BoundedHeap(cap)
        hit = _diff_heap(rng, n_ops, impl, abstract_every)
    else:
        raise ValueError(f"unknown structure {structure!r}")
    if hit is None:
        return DiffReport(structure, seed, n_ops, True)
    step, op, want, got = hit
    return DiffReport(structure, seed, step + 1, False,
                      f"step {step}: op {op}: expected {want!r}, actual {got!r}")
