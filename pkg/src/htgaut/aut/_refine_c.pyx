# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled refinement kernel; same contract as ``_refine_py``."""

from libc.stdlib cimport malloc, free, calloc

ctypedef unsigned long long u64

cdef u64 PRIME = 1099511628211ULL


cdef inline u64 mix(u64 h, long v) nogil:
    return (h ^ <u64>v) * PRIME


cdef void _isort(int *tmp, int *keys, int lo, int hi) noexcept nogil:
    # stable insertion sort of tmp[lo:hi] by keys[tmp[k]]
    cdef int k, j, item, key
    for k in range(lo + 1, hi):
        item = tmp[k]
        key = keys[item]
        j = k - 1
        while j >= lo and keys[tmp[j]] > key:
            tmp[j + 1] = tmp[j]
            j -= 1
        tmp[j + 1] = item


def refine(int[:] offsets, int[:] nbrs, int[:] lab, int[:] pos, int[:] cell,
           int[:] clen, splitters, u64 trace):
    cdef int n = lab.shape[0]
    cdef int *cnt = <int *> calloc(n + 1, sizeof(int))
    cdef char *inq = <char *> calloc(n + 1, sizeof(char))
    cdef char *xmark = <char *> calloc(n + 1, sizeof(char))
    cdef int *queue = <int *> malloc((n + 1) * sizeof(int))
    cdef int *touched = <int *> malloc((n + 1) * sizeof(int))
    cdef int *xs = <int *> malloc((n + 1) * sizeof(int))
    cdef int *tmp = <int *> malloc((n + 1) * sizeof(int))
    cdef int *starts = <int *> malloc((n + 2) * sizeof(int))
    cdef int head = 0, tail = 0, qcap = n + 1
    cdef int w, k, u, idx, v, ntouched, nxs, t, x, size, lo_key, hi_key
    cdef int nstarts, a, b, best, best_size, new_cells = 0
    if not (cnt and inq and xmark and queue and touched and xs and tmp and starts):
        raise MemoryError()
    try:
        for s in splitters:
            queue[tail] = s
            tail = (tail + 1) % qcap
            inq[<int>s] = 1
        with nogil:
            while head != tail:
                w = queue[head]
                head = (head + 1) % qcap
                inq[w] = 0
                trace = mix(trace, w)
                ntouched = 0
                nxs = 0
                for k in range(w, w + clen[w]):
                    u = lab[k]
                    for idx in range(offsets[u], offsets[u + 1]):
                        v = nbrs[idx]
                        if cnt[v] == 0:
                            touched[ntouched] = v
                            ntouched += 1
                            if not xmark[cell[v]]:
                                xmark[cell[v]] = 1
                                xs[nxs] = cell[v]
                                nxs += 1
                        cnt[v] += 1
                # cell starts in increasing order
                for k in range(1, nxs):
                    t = xs[k]
                    idx = k - 1
                    while idx >= 0 and xs[idx] > t:
                        xs[idx + 1] = xs[idx]
                        idx -= 1
                    xs[idx + 1] = t
                for t in range(nxs):
                    x = xs[t]
                    xmark[x] = 0
                    size = clen[x]
                    trace = mix(trace, x)
                    if size == 1:
                        trace = mix(trace, cnt[lab[x]])
                        continue
                    for k in range(size):
                        tmp[k] = lab[x + k]
                    _isort(tmp, cnt, 0, size)
                    lo_key = cnt[tmp[0]]
                    hi_key = cnt[tmp[size - 1]]
                    if lo_key == hi_key:
                        trace = mix(trace, lo_key)
                        continue
                    for k in range(size):
                        lab[x + k] = tmp[k]
                    nstarts = 1
                    starts[0] = x
                    for k in range(1, size):
                        if cnt[tmp[k]] != cnt[tmp[k - 1]]:
                            starts[nstarts] = x + k
                            nstarts += 1
                    starts[nstarts] = x + size
                    best = x
                    best_size = -1
                    for k in range(nstarts):
                        a = starts[k]
                        b = starts[k + 1]
                        clen[a] = b - a
                        trace = mix(mix(trace, cnt[lab[a]]), b - a)
                        if b - a > best_size:
                            best = a
                            best_size = b - a
                        for idx in range(a, b):
                            v = lab[idx]
                            cell[v] = a
                            pos[v] = idx
                    new_cells += nstarts - 1
                    if inq[x]:
                        for k in range(1, nstarts):
                            a = starts[k]
                            queue[tail] = a
                            tail = (tail + 1) % qcap
                            inq[a] = 1
                    else:
                        for k in range(nstarts):
                            a = starts[k]
                            if a != best:
                                queue[tail] = a
                                tail = (tail + 1) % qcap
                                inq[a] = 1
                for k in range(ntouched):
                    cnt[touched[k]] = 0
    finally:
        free(cnt); free(inq); free(xmark); free(queue)
        free(touched); free(xs); free(tmp); free(starts)
    return trace, new_cells


def individualize(int[:] lab, int[:] pos, int[:] cell, int[:] clen, int v, u64 trace):
    cdef int x = cell[v]
    cdef int size = clen[x]
    cdef int p, u, idx
    trace = mix(mix(trace, x), size)
    if size == 1:
        return trace
    p = pos[v]
    u = lab[x]
    lab[x] = v
    lab[p] = u
    pos[v] = x
    pos[u] = p
    clen[x] = 1
    clen[x + 1] = size - 1
    for idx in range(x + 1, x + size):
        cell[lab[idx]] = x + 1
    return trace


def target_cell(int[:] clen, int n):
    cdef int best = -1, best_size = n + 1, x = 0, s
    while x < n:
        s = clen[x]
        if 1 < s < best_size:
            best = x
            best_size = s
            if s == 2:
                break
        x += s
    return best


def is_automorphism(int[:] offsets, int[:] nbrs, int[:] perm):
    cdef int n = perm.shape[0]
    cdef int v, pv, lo, hi, idx, w, k
    cdef bint ok
    for v in range(n):
        pv = perm[v]
        lo = offsets[pv]
        hi = offsets[pv + 1]
        if hi - lo != offsets[v + 1] - offsets[v]:
            return False
        for idx in range(offsets[v], offsets[v + 1]):
            w = perm[nbrs[idx]]
            ok = False
            for k in range(lo, hi):
                if nbrs[k] == w:
                    ok = True
                    break
            if not ok:
                return False
    return True
