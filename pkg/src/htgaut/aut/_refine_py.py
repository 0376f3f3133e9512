"""Pure Python refinement kernel (fallback for ``_refine_c``).

Partition state is four ``array('i')`` buffers of length N:

``lab``   vertices listed cell by cell
``pos``   position of each vertex in ``lab``
``cell``  start position of the cell holding each vertex
``clen``  cell size, meaningful only at a cell's start position

Traces are 64-bit FNV-style hashes of the split history. Both kernels must
produce bit-identical traces and partitions.
"""

from __future__ import annotations

from array import array
from collections import deque

_PRIME = 1099511628211
_MASK = (1 << 64) - 1


def mix(h: int, v: int) -> int:
    return ((h ^ v) * _PRIME) & _MASK


def refine(offsets, nbrs, lab, pos, cell, clen, splitters, trace):
    """Refine to the coarsest equitable partition; return ``(trace, new_cells)``."""
    n = len(lab)
    cnt = [0] * n
    inq = [False] * n
    queue = deque(splitters)
    for s in splitters:
        inq[s] = True
    new_cells = 0
    while queue:
        w = queue.popleft()
        inq[w] = False
        trace = mix(trace, w)
        touched = []
        for k in range(w, w + clen[w]):
            u = lab[k]
            for idx in range(offsets[u], offsets[u + 1]):
                v = nbrs[idx]
                if cnt[v] == 0:
                    touched.append(v)
                cnt[v] += 1
        for x in sorted({cell[v] for v in touched}):
            size = clen[x]
            trace = mix(trace, x)
            if size == 1:
                trace = mix(trace, cnt[lab[x]])
                continue
            members = sorted(lab[x : x + size], key=cnt.__getitem__)
            if cnt[members[0]] == cnt[members[-1]]:
                trace = mix(trace, cnt[members[0]])
                continue
            lab[x : x + size] = array("i", members)
            starts = [x]
            for k in range(1, size):
                if cnt[members[k]] != cnt[members[k - 1]]:
                    starts.append(x + k)
            starts.append(x + size)
            best, best_size = x, -1
            for a, b in zip(starts, starts[1:]):
                clen[a] = b - a
                trace = mix(mix(trace, cnt[lab[a]]), b - a)
                if b - a > best_size:
                    best, best_size = a, b - a
                for idx in range(a, b):
                    v = lab[idx]
                    cell[v] = a
                    pos[v] = idx
            new_cells += len(starts) - 2
            if inq[x]:
                for a in starts[1:-1]:
                    queue.append(a)
                    inq[a] = True
            else:
                for a in starts[:-1]:
                    if a != best:
                        queue.append(a)
                        inq[a] = True
        for v in touched:
            cnt[v] = 0
    return trace, new_cells


def individualize(lab, pos, cell, clen, v, trace):
    """Split ``v`` off the front of its cell; return the updated trace."""
    x = cell[v]
    size = clen[x]
    trace = mix(mix(trace, x), size)
    if size == 1:
        return trace
    p = pos[v]
    u = lab[x]
    lab[x], lab[p] = v, u
    pos[v], pos[u] = x, p
    clen[x] = 1
    clen[x + 1] = size - 1
    for idx in range(x + 1, x + size):
        cell[lab[idx]] = x + 1
    return trace


def target_cell(clen, n):
    """Start of the smallest non-singleton cell (first by position), or -1."""
    best, best_size = -1, n + 1
    x = 0
    while x < n:
        s = clen[x]
        if 1 < s < best_size:
            best, best_size = x, s
            if s == 2:
                break
        x += s
    return best


def is_automorphism(offsets, nbrs, perm):
    for v in range(len(perm)):
        pv = perm[v]
        lo, hi = offsets[pv], offsets[pv + 1]
        if hi - lo != offsets[v + 1] - offsets[v]:
            return False
        image = nbrs[lo:hi]
        for idx in range(offsets[v], offsets[v + 1]):
            if perm[nbrs[idx]] not in image:
                return False
    return True
