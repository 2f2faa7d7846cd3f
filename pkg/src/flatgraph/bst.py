"""Binary search tree of key/value pairs as a discipline over a GraphStore.

Edge slot 0 is the left child, slot 1 the right child, and the root lives in
``vhd``.  Keys and values are positive integers; 0 is the null value, so every
lookup is total and returns 0 for "absent".  Lookups descend with an explicit
count seeded from the live-vertex count, so they terminate even on a corrupted
store.  The spanning-tree search uses this type both as its visited set and as
the tree itself, via :meth:`BstView.mark`.
"""

from __future__ import annotations

from .store import CapacityError, GraphStore, StoreConfig, StoreError, store_new

LEFT = 0
RIGHT = 1


class BstView:

    def __init__(self, store: GraphStore):
        if store.cfg.m_max != 2:
            raise StoreError("BST stores need m_max = 2 (left and right child slots)")
        self.store = store

    @classmethod
    def new(cls, n_max: int) -> "BstView":
        return cls(store_new(StoreConfig(n_max, 2)))

    def __len__(self) -> int:
        return self.store.vcount

    @property
    def root(self) -> int:
        return self.store.vhd

    # -- lookup -----------------------------------------------------------

    def _descend(self, key: int):
        """Count-bounded search for key.

        Returns ``(vertex, steps, exhausted)``: the vertex holding the key (0
        if absent or if any guard fails), the number of child links followed,
        and whether the count ran out before the search resolved.
        """
        s = self.store
        n = s.cfg.n_max
        count = s.vcount
        cur = s.vhd
        karr, earr, varr = s.key, s.edge, s.vtx
        steps = 0
        while True:
            if count == 0:
                # Only a cutoff mid-search counts as exhaustion; landing on a
                # null link (or an empty tree) resolved the search as absent.
                return 0, steps, cur > 0
            if key <= 0 or cur <= 0 or cur > n:
                return 0, steps, False
            k = karr[cur]
            if k == 0:
                return 0, steps, False
            if key == k:
                return cur, steps, False
            cur = earr[varr[cur] + (LEFT if key < k else RIGHT)]
            count -= 1
            steps += 1

    def get(self, key: int) -> int:
        """Value stored at key, or 0 if absent (total, never raises)."""
        v, _, _ = self._descend(key)
        return self.store.data[v] if v else 0

    def get_with_steps(self, key: int):
        """Like :meth:`get` but also reports descent length and exhaustion."""
        v, steps, exhausted = self._descend(key)
        return (self.store.data[v] if v else 0), steps, exhausted

    def exists(self, key: int) -> bool:
        """Key membership via its own descent, independent of stored values."""
        v, _, _ = self._descend(key)
        return v != 0

    # -- mutation ---------------------------------------------------------

    def insert(self, key: int, val: int):
        """Map key to val; overwrites on duplicate key.

        Raises CapacityError, leaving the tree unchanged, when the store is
        full and the key is new.
        """
        if key < 1 or val < 1:
            raise StoreError("BST keys and values must be >= 1")
        s = self.store
        if s.vhd == 0:
            v = s.alloc_vertex(key, val)
            if v == 0:
                raise CapacityError("BST store is full")
            s.vhd = v
            return
        cur = s.vhd
        guard = s.vcount + 1
        while guard > 0:
            k = s.key[cur]
            if key == k:
                s.data[cur] = val
                return
            slot = LEFT if key < k else RIGHT
            b = s.vtx[cur]
            child = s.edge[b + slot]
            if child == 0:
                v = s.alloc_vertex(key, val)
                if v == 0:
                    raise CapacityError("BST store is full")
                s.edge[b + slot] = v
                return
            cur = child
            guard -= 1
        raise StoreError("BST descent did not terminate; store is corrupt")

    def mark(self, v: int, vpred: int):
        """Record vertex v as reached with predecessor vpred."""
        self.insert(v, vpred)

    def delete(self, key: int):
        """Remove key if present; freed vertex returns to the free chain."""
        s = self.store
        cur = s.vhd
        parent, pslot = 0, LEFT
        guard = s.vcount + 1
        while cur != 0 and guard > 0:
            k = s.key[cur]
            if key == k:
                break
            parent, pslot = cur, (LEFT if key < k else RIGHT)
            cur = s.edge[s.vtx[cur] + pslot]
            guard -= 1
        if cur == 0:
            return
        b = s.vtx[cur]
        lc, rc = s.edge[b + LEFT], s.edge[b + RIGHT]
        if lc != 0 and rc != 0:
            # Two children: replace with the in-order successor, then unlink
            # the successor's (at most right-child) node instead.
            sp, sslot = cur, RIGHT
            succ = rc
            while s.edge[s.vtx[succ] + LEFT] != 0:
                sp, sslot = succ, LEFT
                succ = s.edge[s.vtx[succ] + LEFT]
            s.key[cur] = s.key[succ]
            s.data[cur] = s.data[succ]
            cur, parent, pslot = succ, sp, sslot
            b = s.vtx[cur]
            lc, rc = s.edge[b + LEFT], s.edge[b + RIGHT]
        child = lc if lc != 0 else rc
        if parent == 0:
            s.vhd = child
        else:
            s.edge[s.vtx[parent] + pslot] = child
        s.free_vertex(cur)

    # -- observers --------------------------------------------------------

    def inorder(self) -> list:
        """(key, value) pairs in ascending key order; length equals vcount."""
        s = self.store
        out = []
        stack = []
        cur = s.vhd
        limit = s.vcount
        while cur != 0 or stack:
            while cur != 0:
                stack.append(cur)
                if len(stack) > limit:
                    raise StoreError("BST structure is cyclic")
                cur = s.edge[s.vtx[cur] + LEFT]
            cur = stack.pop()
            out.append((s.key[cur], s.data[cur]))
            if len(out) > limit:
                raise StoreError("BST reaches more vertices than are live")
            cur = s.edge[s.vtx[cur] + RIGHT]
        return out

    def audit(self) -> list:
        """Store audit plus tree shape, key range, and BST order checks."""
        s = self.store
        problems = s.audit()
        n = s.cfg.n_max
        seen = set()
        stack = [(s.vhd, 0, None)] if s.vhd != 0 else []
        while stack:
            v, lo, hi = stack.pop()
            if v == 0:
                continue
            if not (1 <= v <= n) or s.vtx[v] == 0:
                problems.append(f"tree reaches dead vertex {v}")
                continue
            if v in seen:
                problems.append(f"tree reaches vertex {v} twice (sharing or cycle)")
                continue
            seen.add(v)
            if len(seen) > s.vcount:
                problems.append("tree reaches more vertices than are live")
                break
            k = s.key[v]
            if k < 1:
                problems.append(f"live vertex {v} has null key")
            if (k <= lo) or (hi is not None and k >= hi):
                problems.append(f"BST order violated at vertex {v} (key {k})")
            b = s.vtx[v]
            stack.append((s.edge[b + LEFT], lo, k))
            stack.append((s.edge[b + RIGHT], k, hi))
        if len(seen) != s.vcount:
            problems.append(
                f"tree reaches {len(seen)} vertices but {s.vcount} are live"
            )
        return problems
