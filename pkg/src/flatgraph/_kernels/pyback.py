"""Pure-Python spanning-search loop.

This is the readable twin of the compiled kernel in ``_cspan``: same loop,
same guard order, same termination-count discipline, expressed through the
high-level BST and deque views.  The two backends are differentially tested
against each other; keep any behavioral change in both.
"""

from __future__ import annotations

from . import common
from .common import SpanStats


def explore_step(g, v, tree, fringe, front: bool) -> int:
    """Scan v's edge slots in ascending order, pushing unreached children.

    Children already in the tree are skipped; each pushed pair is (child, v).
    Returns the number of pairs pushed.  The tree is never modified.
    """
    g._require_live(v)
    b = g.vtx[v]
    push = fringe.push_front if front else fringe.push_back
    pushed = 0
    for slot in range(g.cfg.m_max):
        t = g.edge[b + slot]
        if t != 0 and not tree.exists(t):
            push(t, v)
            pushed += 1
    return pushed


def run_span(count, target, g, tree, fringe, front: bool) -> SpanStats:
    """Count-bounded spanning search; mutates tree and fringe in place.

    Stops when the count runs out, the target key enters the tree, or the
    fringe drains.  Malformed fringe pairs stop the search defensively.
    Capacity exhaustion in the tree or fringe raises CapacityError.
    """
    gn, gm = g.cfg.n_max, g.cfg.m_max
    tn = tree.store.cfg.n_max
    steps = 0
    peak = len(fringe)
    descent_ok = True
    while True:
        if count == 0:
            status = common.COUNT_EXHAUSTED
            break
        if target < 0 or target > gn:
            status = common.MALFORMED
            break
        hit, _, exhausted = tree._descend(target)
        if exhausted:
            descent_ok = False
        if hit != 0:
            status = common.FOUND
            break
        pair = fringe.peek_front()
        if pair is None:
            status = common.FRINGE_EMPTY
            break
        v, vpred = pair
        if not (1 <= v <= tn) or not (1 <= vpred <= tn):
            status = common.MALFORMED
            break
        fringe.pop_front()
        node, _, exhausted = tree._descend(v)
        if exhausted:
            descent_ok = False
        if node == 0:
            tree.mark(v, vpred)
            if g.is_live(v):
                b = g.vtx[v]
                push = fringe.push_front if front else fringe.push_back
                for slot in range(gm):
                    t = g.edge[b + slot]
                    if t != 0:
                        child, _, exhausted = tree._descend(t)
                        if exhausted:
                            descent_ok = False
                        if child == 0:
                            push(t, v)
                if len(fringe) > peak:
                    peak = len(fringe)
        count -= 1
        steps += 1
    return SpanStats(status, steps, count, peak, descent_ok)
