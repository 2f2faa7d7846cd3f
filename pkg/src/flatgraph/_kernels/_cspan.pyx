# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled spanning-search loop.

Mirrors ``pyback.run_span`` exactly: same guard order, same count discipline,
same child-scan order.  Operates directly on the flat store arrays; the
wrapper in ``_kernels.__init__`` unpacks the stores and writes the mutated
scalars back.  Keep any behavioral change in both backends.
"""

# Must stay in sync with _kernels.common status codes.
cdef int ST_FOUND = 0
cdef int ST_FRINGE_EMPTY = 1
cdef int ST_COUNT_EXHAUSTED = 2
cdef int ST_MALFORMED = 3
cdef int ST_TREE_FULL = 4
cdef int ST_FRINGE_FULL = 5


cdef inline long long _find(long long key, long long tn, long long t_vhd,
                            long long t_vcount,
                            long long[::1] t_key, long long[::1] t_vtx,
                            long long[::1] t_edge) noexcept nogil:
    # Count-bounded BST descent: 1 = present, 0 = absent, -1 = count exhausted.
    cdef long long fuel = t_vcount
    cdef long long cur = t_vhd
    cdef long long k
    while True:
        if fuel == 0:
            # A cutoff mid-search; a null link at fuel 0 resolved as absent.
            return -1 if cur > 0 else 0
        if key <= 0 or cur <= 0 or cur > tn:
            return 0
        k = t_key[cur]
        if k == 0:
            return 0
        if key == k:
            return 1
        if key < k:
            cur = t_edge[t_vtx[cur]]
        else:
            cur = t_edge[t_vtx[cur] + 1]
        fuel -= 1


def span_loop(long long count, long long target, bint front,
              long long gn, long long gm,
              long long[::1] g_vtx, long long[::1] g_edge,
              long long tn,
              long long[::1] t_vtx, long long[::1] t_key, long long[::1] t_val,
              long long[::1] t_edge,
              long long t_vhd, long long t_vcount, long long t_free,
              long long fn,
              long long[::1] f_vtx, long long[::1] f_key, long long[::1] f_val,
              long long[::1] f_edge,
              long long f_vhd, long long f_vtl, long long f_vcount,
              long long f_free):
    cdef long long steps = 0
    cdef long long peak = f_vcount
    cdef bint descent_ok = True
    cdef int status = ST_FRINGE_EMPTY
    cdef long long v, vpred, node, nxt, b, k, cur, parent, slot, t, child, r
    cdef long long s

    with nogil:
        while True:
            if count == 0:
                status = ST_COUNT_EXHAUSTED
                break
            if target < 0 or target > gn:
                status = ST_MALFORMED
                break
            r = _find(target, tn, t_vhd, t_vcount, t_key, t_vtx, t_edge)
            if r == -1:
                descent_ok = False
            if r == 1:
                status = ST_FOUND
                break
            node = f_vhd
            if node == 0:
                status = ST_FRINGE_EMPTY
                break
            v = f_key[node]
            vpred = f_val[node]
            if v < 1 or v > tn or vpred < 1 or vpred > tn:
                status = ST_MALFORMED
                break
            # pop the front fringe node and push it on the fringe free chain
            b = f_vtx[node]
            nxt = f_edge[b + 1]
            f_vhd = nxt
            if nxt != 0:
                f_edge[f_vtx[nxt]] = 0
            else:
                f_vtl = 0
            f_key[node] = 0
            f_val[node] = 0
            f_vtx[node] = 0
            f_edge[b + 1] = 0
            f_edge[b] = f_free
            f_free = node
            f_vcount -= 1

            r = _find(v, tn, t_vhd, t_vcount, t_key, t_vtx, t_edge)
            if r == -1:
                descent_ok = False
            if r == 0:
                # mark(v, vpred): insert a fresh key into the spanning tree
                cur = t_free
                if cur == 0:
                    status = ST_TREE_FULL
                    break
                b = (cur - 1) * 2 + 1
                t_free = t_edge[b]
                t_edge[b] = 0
                t_edge[b + 1] = 0
                t_vtx[cur] = b
                t_key[cur] = v
                t_val[cur] = vpred
                t_vcount += 1
                if t_vhd == 0:
                    t_vhd = cur
                else:
                    parent = t_vhd
                    r = tn + 1
                    while True:
                        if r == 0:
                            status = ST_MALFORMED
                            break
                        k = t_key[parent]
                        slot = 0 if v < k else 1
                        child = t_edge[t_vtx[parent] + slot]
                        if child == 0:
                            t_edge[t_vtx[parent] + slot] = cur
                            break
                        parent = child
                        r -= 1
                    if status == ST_MALFORMED:
                        break

                # explore v's edge block, pushing unreached children
                if v <= gn and g_vtx[v] != 0:
                    b = g_vtx[v]
                    for s in range(gm):
                        t = g_edge[b + s]
                        if t != 0:
                            r = _find(t, tn, t_vhd, t_vcount, t_key, t_vtx, t_edge)
                            if r == -1:
                                descent_ok = False
                            if r == 0:
                                node = f_free
                                if node == 0:
                                    status = ST_FRINGE_FULL
                                    break
                                k = (node - 1) * 2 + 1
                                f_free = f_edge[k]
                                f_edge[k] = 0
                                f_edge[k + 1] = 0
                                f_vtx[node] = k
                                f_key[node] = t
                                f_val[node] = v
                                f_vcount += 1
                                if front:
                                    f_edge[k + 1] = f_vhd
                                    if f_vhd != 0:
                                        f_edge[f_vtx[f_vhd]] = node
                                    else:
                                        f_vtl = node
                                    f_vhd = node
                                else:
                                    f_edge[k] = f_vtl
                                    if f_vtl != 0:
                                        f_edge[f_vtx[f_vtl] + 1] = node
                                    else:
                                        f_vhd = node
                                    f_vtl = node
                    if status == ST_FRINGE_FULL:
                        break
                    if f_vcount > peak:
                        peak = f_vcount
            count -= 1
            steps += 1

    return (t_vhd, t_vcount, t_free, f_vhd, f_vtl, f_vcount, f_free,
            status, steps, count, peak, descent_ok)
