"""Fixed-capacity, allocation-free graphs and bounded algebraic datatypes.

Everything is built on one flat-array store (:class:`GraphStore`) with a
reserved null slot 0: binary search trees and pair deques are disciplines over
it, a bounded heap backs Dijkstra, and the DFS/BFS spanning search runs on a
compiled kernel with a pure-Python fallback.  Reference models and a
differential-test harness live in :mod:`flatgraph.oracle`.
"""

from ._kernels import available_backends, default_backend
from .bst import BstView
from .dlist import DequeView
from .heap import BoundedHeap
from .search import (DistResult, SpanResult, all_pairs, bfs_span, dfs_span,
                     dijkstra, explore, span_from)
from .store import (CapacityError, GraphStore, StoreConfig, StoreError,
                    store_new)

__version__ = "0.1.0"

__all__ = [
    "BoundedHeap", "BstView", "CapacityError", "DequeView", "DistResult",
    "GraphStore", "SpanResult", "StoreConfig", "StoreError", "all_pairs",
    "available_backends", "bfs_span", "default_backend", "dfs_span",
    "dijkstra", "explore", "span_from", "store_new",
]
