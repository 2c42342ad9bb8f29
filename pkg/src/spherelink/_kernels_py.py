"""Pure-Python versions of the compiled kernels."""

from __future__ import annotations


def face_classes(nfaces: int, f1: list[int], f2: list[int], cut: list[int]) -> list[int]:
    """Union faces across every edge whose ``cut`` flag is 0.

    Edge ``i`` separates faces ``f1[i]`` and ``f2[i]``.  Returns a class
    representative per face.
    """
    parent = list(range(nfaces))
    for a, b, c in zip(f1, f2, cut):
        if c:
            continue
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        if a != b:
            parent[a] = b
    out = []
    for x in range(nfaces):
        while parent[x] != x:
            x = parent[x]
        out.append(x)
    return out


def min_map_code(offsets: list[int], nbrs: list[int], rev: list[int], roots: list[int]) -> list[int]:
    """Least breadth-first code of a rotation system over the given root darts.

    The rotation is in compressed form: the neighbours of ``x`` in cyclic
    order are ``nbrs[offsets[x]:offsets[x + 1]]``.  A dart is an index into
    ``nbrs``; ``rev[i]`` is the position of the reverse dart inside its
    tail's list.  Each row of the code is the degree followed by the
    breadth-first numbers of the neighbours, starting from the dart we
    arrived by.
    """
    n = len(offsets) - 1
    tail = [0] * len(nbrs)
    for x in range(n):
        for i in range(offsets[x], offsets[x + 1]):
            tail[i] = x
    best: list[int] | None = None
    for root in roots:
        u = tail[root]
        num = [-1] * n
        start = [0] * n
        num[u] = 0
        start[u] = root - offsets[u]
        order = [u]
        code: list[int] = []
        worse = False
        better = best is None
        i = 0
        while i < len(order) and not worse:
            x = order[i]
            i += 1
            o = offsets[x]
            d = offsets[x + 1] - o
            s = start[x]
            row = [d]
            for t in range(d):
                idx = o + (s + t) % d
                w = nbrs[idx]
                if num[w] < 0:
                    num[w] = len(order)
                    order.append(w)
                    start[w] = rev[idx]
                row.append(num[w])
            for val in row:
                if not better:
                    b = best[len(code)]
                    if val > b:
                        worse = True
                        break
                    if val < b:
                        better = True
                code.append(val)
        if not worse and better:
            best = code
    return best if best is not None else []


def refine(cells: list[list[int]], nb: list[int]) -> list[list[int]]:
    """Equitable refinement of an ordered partition.

    ``nb[v]`` is the neighbourhood bitmask of ``v``.  Cells split by the
    number of neighbours in every current cell; the pieces of a split cell
    are ordered by that count vector.
    """
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out = []
        split = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sig: dict[tuple, list[int]] = {}
            for v in c:
                s = tuple((nb[v] & m).bit_count() for m in masks)
                sig.setdefault(s, []).append(v)
            if len(sig) > 1:
                split = True
                for s in sorted(sig):
                    out.append(sig[s])
            else:
                out.append(c)
        cells = out
        if not split:
            return cells
