"""Backend selection for the spanning-search kernel.

The compiled kernel (``_cspan``, built from Cython) is used when its extension
module imports cleanly; otherwise the pure-Python twin in ``pyback`` takes
over.  Set ``FLATGRAPH_BACKEND=py`` or ``=c`` to force a choice, or pass
``backend=`` explicitly to :func:`run_span`.
"""

from __future__ import annotations

import os

from ..store import CapacityError, StoreError
from . import common, pyback
from .common import SpanStats

try:
    from . import _cspan
except ImportError:  # extension not built; pure-Python fallback
    _cspan = None


def available_backends() -> tuple:
    return ("c", "py") if _cspan is not None else ("py",)


def default_backend() -> str:
    env = os.environ.get("FLATGRAPH_BACKEND", "").strip().lower()
    if env:
        if env not in ("c", "py"):
            raise StoreError(f"FLATGRAPH_BACKEND must be 'c' or 'py', got {env!r}")
        if env == "c" and _cspan is None:
            raise StoreError("FLATGRAPH_BACKEND=c but the compiled kernel is not built")
        return env
    return "c" if _cspan is not None else "py"


def run_span(count, target, g, tree, fringe, front, backend=None) -> SpanStats:
    """Run the spanning-search loop on the selected backend.

    Mutates tree and fringe in place; raises CapacityError if either runs out
    of room mid-search.
    """
    name = backend or default_backend()
    if name == "py":
        return pyback.run_span(count, target, g, tree, fringe, front)
    if name != "c":
        raise StoreError(f"unknown backend {name!r}")
    if _cspan is None:
        raise StoreError("compiled kernel is not built; use backend='py'")
    ts, fs = tree.store, fringe.store
    (ts.vhd, ts.vcount, ts.free_hd,
     fs.vhd, fs.vtl, fs.vcount, fs.free_hd,
     status, steps, count_left, peak, descent_ok) = _cspan.span_loop(
        count, target, bool(front),
        g.cfg.n_max, g.cfg.m_max, g.vtx, g.edge,
        ts.cfg.n_max, ts.vtx, ts.key, ts.data, ts.edge,
        ts.vhd, ts.vcount, ts.free_hd,
        fs.cfg.n_max, fs.vtx, fs.key, fs.data, fs.edge,
        fs.vhd, fs.vtl, fs.vcount, fs.free_hd)
    if status == common.TREE_FULL:
        raise CapacityError("BST store is full")
    if status == common.FRINGE_FULL:
        raise CapacityError("deque store is full")
    return SpanStats(status, steps, count_left, peak, bool(descent_ok))
