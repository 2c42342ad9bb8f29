# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the kernels in ``_kernels_py``."""

from libc.stdlib cimport malloc, free


cdef inline int _find(int *parent, int x) noexcept:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def face_classes(int nfaces, list f1, list f2, list cut):
    cdef int *parent = <int *> malloc(max(nfaces, 1) * sizeof(int))
    cdef int i, a, b, m = len(f1)
    try:
        for i in range(nfaces):
            parent[i] = i
        for i in range(m):
            if cut[i]:
                continue
            a = _find(parent, f1[i])
            b = _find(parent, f2[i])
            if a != b:
                parent[a] = b
        return [_find(parent, i) for i in range(nfaces)]
    finally:
        free(parent)


def min_map_code(list offsets, list nbrs, list rev, list roots):
    cdef int n = len(offsets) - 1
    cdef int nd = len(nbrs)
    cdef int clen = n + nd
    cdef int *off = <int *> malloc((n + 1) * sizeof(int))
    cdef int *nb = <int *> malloc(max(nd, 1) * sizeof(int))
    cdef int *rv = <int *> malloc(max(nd, 1) * sizeof(int))
    cdef int *tail = <int *> malloc(max(nd, 1) * sizeof(int))
    cdef int *num = <int *> malloc(max(n, 1) * sizeof(int))
    cdef int *start = <int *> malloc(max(n, 1) * sizeof(int))
    cdef int *order = <int *> malloc(max(n, 1) * sizeof(int))
    cdef int *best = <int *> malloc(max(clen, 1) * sizeof(int))
    cdef int *code = <int *> malloc(max(clen, 1) * sizeof(int))
    cdef int have_best = 0
    cdef int x, i, t, d, o, s, w, idx, u, root, qlen, head, pos, val, worse, better
    try:
        for i in range(n + 1):
            off[i] = offsets[i]
        for i in range(nd):
            nb[i] = nbrs[i]
            rv[i] = rev[i]
        for x in range(n):
            for i in range(off[x], off[x + 1]):
                tail[i] = x
        for root in roots:
            u = tail[root]
            for i in range(n):
                num[i] = -1
            num[u] = 0
            start[u] = root - off[u]
            order[0] = u
            qlen = 1
            head = 0
            pos = 0
            worse = 0
            better = 0 if have_best else 1
            while head < qlen and not worse:
                x = order[head]
                head += 1
                o = off[x]
                d = off[x + 1] - o
                s = start[x]
                for t in range(-1, d):
                    if t < 0:
                        val = d
                    else:
                        idx = o + (s + t) % d
                        w = nb[idx]
                        if num[w] < 0:
                            num[w] = qlen
                            order[qlen] = w
                            qlen += 1
                            start[w] = rv[idx]
                        val = num[w]
                    if not better:
                        if val > best[pos]:
                            worse = 1
                            break
                        if val < best[pos]:
                            better = 1
                    code[pos] = val
                    pos += 1
            if not worse and better:
                for i in range(pos):
                    best[i] = code[i]
                have_best = 1
        if not have_best:
            return []
        return [best[i] for i in range(clen)]
    finally:
        free(off); free(nb); free(rv); free(tail); free(num)
        free(start); free(order); free(best); free(code)


from libc.stdint cimport uint64_t

from ._kernels_py import refine as _refine_py


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


def refine(list cells, list nb):
    cdef int k = len(nb)
    if k > 64:
        return _refine_py(cells, nb)
    cdef uint64_t nbc[64]
    cdef uint64_t masks[64]
    cdef unsigned char sigbuf[64]
    cdef int i, j, v, ncells
    cdef uint64_t m
    cdef bint split
    for i in range(k):
        nbc[i] = <uint64_t> nb[i]
    while True:
        ncells = len(cells)
        for j in range(ncells):
            m = 0
            for v in cells[j]:
                m |= (<uint64_t> 1) << v
            masks[j] = m
        out = []
        split = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sig = {}
            for v in c:
                for j in range(ncells):
                    sigbuf[j] = __builtin_popcountll(nbc[v] & masks[j])
                key = sigbuf[:ncells]
                if key in sig:
                    sig[key].append(v)
                else:
                    sig[key] = [v]
            if len(sig) > 1:
                split = True
                for key in sorted(sig):
                    out.append(sig[key])
            else:
                out.append(c)
        cells = out
        if not split:
            return cells
