"""Fixed-capacity binary min-heap of (priority, vertex) entries.

Backs Dijkstra with lazy decrease-key: every relaxation pushes a fresh entry
and stale entries are skipped at pop, so the capacity needed is the edge count
plus one.  Ties break toward the smaller vertex index, which makes pop order
(and therefore CLI output) deterministic.  Storage is two parallel lists sized
once at construction; no allocation happens afterwards.
"""

from __future__ import annotations

from .store import CapacityError, StoreError


class BoundedHeap:

    def __init__(self, cap: int):
        if cap < 1:
            raise StoreError("heap capacity must be >= 1")
        self.cap = cap
        self._prio = [0] * cap
        self._vert = [0] * cap
        self._len = 0

    def __len__(self) -> int:
        return self._len

    def push(self, priority: int, vertex: int):
        if priority < 0 or vertex < 0:
            raise StoreError("heap entries must be non-negative")
        if self._len == self.cap:
            raise CapacityError("heap overflow: capacity was sized too small")
        prio, vert = self._prio, self._vert
        i = self._len
        self._len += 1
        while i > 0:
            parent = (i - 1) >> 1
            if (prio[parent], vert[parent]) <= (priority, vertex):
                break
            prio[i], vert[i] = prio[parent], vert[parent]
            i = parent
        prio[i], vert[i] = priority, vertex

    def pop_min(self):
        """Remove and return the minimal (priority, vertex), or None if empty."""
        if self._len == 0:
            return None
        prio, vert = self._prio, self._vert
        top = (prio[0], vert[0])
        self._len -= 1
        n = self._len
        if n > 0:
            p, v = prio[n], vert[n]
            i = 0
            while True:
                child = 2 * i + 1
                if child >= n:
                    break
                right = child + 1
                if right < n and (prio[right], vert[right]) < (prio[child], vert[child]):
                    child = right
                if (p, v) <= (prio[child], vert[child]):
                    break
                prio[i], vert[i] = prio[child], vert[child]
                i = child
            prio[i], vert[i] = p, v
        return top

    def items(self) -> list:
        """Current entries as a sorted list (observer for differential tests)."""
        return sorted(zip(self._prio[: self._len], self._vert[: self._len]))

    def audit(self) -> list:
        """Heap-order check; returns a list of violation strings."""
        problems = []
        prio, vert = self._prio, self._vert
        for i in range(1, self._len):
            parent = (i - 1) >> 1
            if (prio[parent], vert[parent]) > (prio[i], vert[i]):
                problems.append(f"heap order violated at position {i}")
        if not (0 <= self._len <= self.cap):
            problems.append(f"length {self._len} outside [0, {self.cap}]")
        return problems
