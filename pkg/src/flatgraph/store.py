"""Fixed-capacity, allocation-free graph store backed by flat integer arrays.

All structure lives in five arrays (vertex pointers, per-vertex data and keys,
edge targets, edge weights) plus four scalars (head, tail, live count, free
chain head).  Index 0 of every array is reserved: the value 0 always means
"no vertex" / "no edge" / "no value", and slot 0 is never written after
construction.  Every higher-level datatype in this package (BST, deque) is a
usage discipline imposed on one of these stores.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass

import numpy as np

# Keep n_max * m_max comfortably inside int64 so edge indices never overflow
# the compiled kernel's index type.
_INDEX_LIMIT = 2**62


class StoreError(ValueError):
    """A caller violated an operation precondition."""


class CapacityError(RuntimeError):
    """A fixed-capacity structure ran out of room."""


@dataclass(frozen=True)
class StoreConfig:
    """Capacity bounds: at most n_max live vertices, m_max out-edges each."""

    n_max: int
    m_max: int

    def __post_init__(self):
        if self.n_max < 1 or self.m_max < 1:
            raise StoreError(
                f"capacities must be >= 1, got n_max={self.n_max} m_max={self.m_max}"
            )
        if self.n_max * self.m_max >= _INDEX_LIMIT:
            raise StoreError(
                f"capacity product {self.n_max}*{self.m_max} overflows the edge index range"
            )

    @property
    def edge_len(self) -> int:
        return self.n_max * self.m_max + 1


def _zeros(length: int) -> array:
    return array("q", bytes(8 * length))


class GraphStore:
    """The array seven-tuple plus a free chain threaded through free blocks.

    Layout invariants (all checked by :meth:`audit`):

    * vtx[v] is the base index of v's edge block, ``(v-1)*m_max + 1``, when v
      is live; 0 when v is free.
    * edge/weight entries for a live vertex v occupy the half-open block
      ``[vtx[v], vtx[v] + m_max)``; blocks of distinct vertices never overlap.
    * Free vertices are chained through slot 0 of their own edge block,
      starting at ``free_hd``; the chain visits every free vertex exactly once.
    * Index 0 of every array stays 0 forever, and no array ever changes length
      after construction.
    """

    __slots__ = ("cfg", "vtx", "data", "key", "edge", "weight",
                 "vhd", "vtl", "vcount", "free_hd")

    def __init__(self, cfg: StoreConfig):
        n, m = cfg.n_max, cfg.m_max
        self.cfg = cfg
        self.vtx = _zeros(n + 1)
        self.data = _zeros(n + 1)
        self.key = _zeros(n + 1)
        self.edge = _zeros(n * m + 1)
        self.weight = _zeros(n * m + 1)
        self.vhd = 0
        self.vtl = 0
        self.vcount = 0
        self.free_hd = 1
        if n > 1:
            # Thread the free chain 1 -> 2 -> ... -> n through slot 0 of each
            # free block; the last link is 0.
            e = np.frombuffer(self.edge, dtype=np.int64)
            bases = (np.arange(1, n, dtype=np.int64) - 1) * m + 1
            e[bases] = np.arange(2, n + 1, dtype=np.int64)

    # -- basic queries ----------------------------------------------------

    @property
    def n_max(self) -> int:
        return self.cfg.n_max

    @property
    def m_max(self) -> int:
        return self.cfg.m_max

    def block_base(self, v: int) -> int:
        return (v - 1) * self.cfg.m_max + 1

    def is_live(self, v: int) -> bool:
        return 1 <= v <= self.cfg.n_max and self.vtx[v] != 0

    def live_vertices(self):
        """Live vertex indices in ascending order."""
        vtx = self.vtx
        return [v for v in range(1, self.cfg.n_max + 1) if vtx[v] != 0]

    def array_lengths(self) -> tuple:
        """Capacity probe: these must never change after construction."""
        return (len(self.vtx), len(self.data), len(self.key),
                len(self.edge), len(self.weight))

    def _require_live(self, v: int):
        if not (1 <= v <= self.cfg.n_max) or self.vtx[v] == 0:
            raise StoreError(f"vertex {v} is not live")

    def _require_slot(self, slot: int):
        if not (0 <= slot < self.cfg.m_max):
            raise StoreError(f"edge slot {slot} out of range [0, {self.cfg.m_max})")

    # -- vertex allocation ------------------------------------------------

    def alloc_vertex(self, key: int = 0, payload: int = 0) -> int:
        """Pop a vertex off the free chain; returns 0 when the store is full."""
        if key < 0 or payload < 0:
            raise StoreError("key and payload must be non-negative")
        v = self.free_hd
        if v == 0:
            return 0
        b = self.block_base(v)
        self.free_hd = self.edge[b]
        for i in range(b, b + self.cfg.m_max):
            self.edge[i] = 0
            self.weight[i] = 0
        self.vtx[v] = b
        self.key[v] = key
        self.data[v] = payload
        self.vcount += 1
        return v

    def free_vertex(self, v: int):
        """Return a live vertex to the free chain, scrubbing its state."""
        self._require_live(v)
        b = self.block_base(v)
        for i in range(b, b + self.cfg.m_max):
            self.edge[i] = 0
            self.weight[i] = 0
        self.key[v] = 0
        self.data[v] = 0
        self.vtx[v] = 0
        self.edge[b] = self.free_hd
        self.free_hd = v
        self.vcount -= 1
        if self.vhd == v:
            self.vhd = 0
        if self.vtl == v:
            self.vtl = 0

    # -- field accessors --------------------------------------------------

    def set_edge(self, v: int, slot: int, target: int):
        self._require_live(v)
        self._require_slot(slot)
        if not (0 <= target <= self.cfg.n_max):
            raise StoreError(f"edge target {target} out of range [0, {self.cfg.n_max}]")
        if target != 0 and self.vtx[target] == 0:
            raise StoreError(f"edge target {target} is not live")
        self.edge[self.vtx[v] + slot] = target

    def get_edge(self, v: int, slot: int) -> int:
        self._require_live(v)
        self._require_slot(slot)
        return self.edge[self.vtx[v] + slot]

    def set_weight(self, v: int, slot: int, w: int):
        self._require_live(v)
        self._require_slot(slot)
        if w < 0:
            raise StoreError("edge weights must be non-negative")
        self.weight[self.vtx[v] + slot] = w

    def get_weight(self, v: int, slot: int) -> int:
        self._require_live(v)
        self._require_slot(slot)
        return self.weight[self.vtx[v] + slot]

    def set_key(self, v: int, k: int):
        self._require_live(v)
        if k < 0:
            raise StoreError("keys must be non-negative")
        self.key[v] = k

    def get_key(self, v: int) -> int:
        self._require_live(v)
        return self.key[v]

    def set_data(self, v: int, d: int):
        self._require_live(v)
        if d < 0:
            raise StoreError("data values must be non-negative")
        self.data[v] = d

    def get_data(self, v: int) -> int:
        self._require_live(v)
        return self.data[v]

    # -- bulk helpers (used by loaders and generators) --------------------

    def rebuild_free_chain(self):
        """Re-thread the free chain, ascending, from current vertex liveness.

        Only touches slot 0 of free blocks; callers that placed vertices by
        writing ``vtx`` directly must have cleared stale links from live
        blocks first.
        """
        vtx = np.frombuffer(self.vtx, dtype=np.int64)
        e = np.frombuffer(self.edge, dtype=np.int64)
        frees = np.nonzero(vtx[1:] == 0)[0].astype(np.int64) + 1
        if frees.size == 0:
            self.free_hd = 0
            return
        bases = (frees - 1) * self.cfg.m_max + 1
        links = np.empty_like(frees)
        links[:-1] = frees[1:]
        links[-1] = 0
        e[bases] = links
        self.free_hd = int(frees[0])

    # -- invariant audit --------------------------------------------------

    def audit(self) -> list:
        """Check every store invariant; returns a list of violation strings."""
        problems = []
        n, m = self.cfg.n_max, self.cfg.m_max
        vtx = np.frombuffer(self.vtx, dtype=np.int64)
        edge = np.frombuffer(self.edge, dtype=np.int64)
        arrays = (("vtx", vtx),
                  ("data", np.frombuffer(self.data, dtype=np.int64)),
                  ("key", np.frombuffer(self.key, dtype=np.int64)),
                  ("edge", edge),
                  ("weight", np.frombuffer(self.weight, dtype=np.int64)))
        for name, arr in arrays:
            if arr[0] != 0:
                problems.append(f"zero-slot: {name}[0] = {arr[0]}")
        for name, arr in arrays[1:]:
            bad = np.nonzero(arr < 0)[0]
            for i in bad[:3]:
                problems.append(f"negative entry: {name}[{i}] = {arr[i]}")

        live = vtx[1:] != 0
        nlive = int(live.sum())
        if self.vcount != nlive:
            problems.append(f"vcount = {self.vcount}, but {nlive} vertices are live")

        bases = (np.arange(1, n + 1, dtype=np.int64) - 1) * m + 1
        bad = np.nonzero(live & (vtx[1:] != bases))[0]
        for i in bad[:3]:
            v = int(i) + 1
            problems.append(f"vtx[{v}] = {vtx[v]}, expected block base {bases[i]}")
        bad = np.nonzero((vtx < 0) | (vtx > n * m))[0]
        for i in bad[:3]:
            problems.append(f"vtx[{i}] = {vtx[i]} out of range [0, {n * m}]")
        bad = np.nonzero((edge < 0) | (edge > n))[0]
        for i in bad[:3]:
            problems.append(f"edge[{i}] = {edge[i]} out of range [0, {n}]")

        for name, v in (("vhd", self.vhd), ("vtl", self.vtl)):
            if v != 0 and (not (1 <= v <= n) or vtx[v] == 0):
                problems.append(f"{name} = {v} is neither 0 nor a live vertex")

        seen = set()
        v = self.free_hd
        broken = False
        while v != 0:
            if not (1 <= v <= n):
                problems.append(f"free chain leaves vertex range at {v}")
                broken = True
                break
            if vtx[v] != 0:
                problems.append(f"free chain visits live vertex {v}")
                broken = True
                break
            if v in seen:
                problems.append(f"free chain revisits vertex {v}")
                broken = True
                break
            seen.add(v)
            v = int(edge[(v - 1) * m + 1])
        if not broken and len(seen) != n - nlive:
            problems.append(
                f"free chain covers {len(seen)} vertices, expected {n - nlive} free"
            )
        return problems


def store_new(cfg: StoreConfig) -> GraphStore:
    """Build an empty store; no allocation ever happens after this call."""
    return GraphStore(cfg)
