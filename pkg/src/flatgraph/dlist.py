"""Doubly-linked deque of (vertex, predecessor) pairs over a GraphStore.

Edge slot 0 holds the previous-node link, slot 1 the next-node link; the front
node index sits in ``vhd`` and the back node in ``vtl``.  Each node stores its
pair as (key, data) = (vertex, predecessor).  Pushing at the front and popping
at the front gives a stack; pushing at the back and popping at the front gives
a queue.  The spanning-tree search uses this type as its fringe.
"""

from __future__ import annotations

from .store import CapacityError, GraphStore, StoreConfig, StoreError, store_new

PREV = 0
NEXT = 1


class DequeView:

    def __init__(self, store: GraphStore):
        if store.cfg.m_max != 2:
            raise StoreError("deque stores need m_max = 2 (prev and next slots)")
        self.store = store

    @classmethod
    def new(cls, n_max: int) -> "DequeView":
        return cls(store_new(StoreConfig(n_max, 2)))

    def __len__(self) -> int:
        return self.store.vcount

    def _alloc(self, v: int, vpred: int) -> int:
        if v < 1 or vpred < 1:
            raise StoreError("deque pairs must hold positive vertex indices")
        node = self.store.alloc_vertex(v, vpred)
        if node == 0:
            raise CapacityError("deque store is full")
        return node

    def push_front(self, v: int, vpred: int):
        s = self.store
        node = self._alloc(v, vpred)
        old = s.vhd
        s.edge[s.vtx[node] + NEXT] = old
        if old != 0:
            s.edge[s.vtx[old] + PREV] = node
        else:
            s.vtl = node
        s.vhd = node

    def push_back(self, v: int, vpred: int):
        s = self.store
        node = self._alloc(v, vpred)
        old = s.vtl
        s.edge[s.vtx[node] + PREV] = old
        if old != 0:
            s.edge[s.vtx[old] + NEXT] = node
        else:
            s.vhd = node
        s.vtl = node

    def pop_front(self):
        """Remove and return the front (vertex, pred) pair, or None if empty."""
        s = self.store
        node = s.vhd
        if node == 0:
            return None
        pair = (s.key[node], s.data[node])
        nxt = s.edge[s.vtx[node] + NEXT]
        s.vhd = nxt
        if nxt != 0:
            s.edge[s.vtx[nxt] + PREV] = 0
        else:
            s.vtl = 0
        s.free_vertex(node)
        return pair

    def pop_back(self):
        s = self.store
        node = s.vtl
        if node == 0:
            return None
        pair = (s.key[node], s.data[node])
        prv = s.edge[s.vtx[node] + PREV]
        s.vtl = prv
        if prv != 0:
            s.edge[s.vtx[prv] + NEXT] = 0
        else:
            s.vhd = 0
        s.free_vertex(node)
        return pair

    def peek_front(self):
        """Front pair without removal, or None if empty."""
        s = self.store
        node = s.vhd
        if node == 0:
            return None
        return (s.key[node], s.data[node])

    def audit(self) -> list:
        """Store audit plus chain coverage and prev/next link symmetry."""
        s = self.store
        problems = s.audit()
        if (s.vhd == 0) != (s.vtl == 0):
            problems.append(f"vhd = {s.vhd} and vtl = {s.vtl} disagree about emptiness")
        seen = []
        node = s.vhd
        prev = 0
        while node != 0:
            if not s.is_live(node):
                problems.append(f"chain reaches dead vertex {node}")
                break
            if s.edge[s.vtx[node] + PREV] != prev:
                problems.append(f"prev link of node {node} does not point back")
                break
            seen.append(node)
            if len(seen) > s.vcount:
                problems.append("chain is longer than the live-vertex count")
                break
            prev = node
            node = s.edge[s.vtx[node] + NEXT]
        else:
            if seen and seen[-1] != s.vtl:
                problems.append(f"chain ends at {seen[-1]}, but vtl = {s.vtl}")
            if len(seen) != s.vcount:
                problems.append(
                    f"chain visits {len(seen)} nodes but {s.vcount} are live"
                )
        return problems
