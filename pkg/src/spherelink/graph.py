"""Finite simple graphs, minor operations and isomorphism-invariant forms.

Vertices are the integers ``0 .. n-1``.  Every operation returns a new
:class:`Graph`; nothing is mutated in place.  Vertex numbering after an
operation is part of the contract and documented per function, because
minor witnesses are replayed step by step against those numbers.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field
from functools import cached_property

from .kernels import refine


class GraphError(ValueError):
    """Raised for malformed graphs or references to missing vertices/edges."""


Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: frozenset[Edge]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __init__(self, vertex_count: int, edges: Iterable[Edge] = (), labels=None):
        if vertex_count < 0:
            raise GraphError("vertex_count must be non-negative")
        norm = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
            e = _norm(u, v)
            if e in norm:
                raise GraphError(f"parallel edge {e}")
            norm.add(e)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != vertex_count:
                raise GraphError("labels must name every vertex")
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nb: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by least vertex."""
        seen = [False] * self.vertex_count
        out = []
        for s in range(self.vertex_count):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [s], [s]
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.vertex_count <= 1 or len(self.components()) == 1

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph on ``vertices``; returns it with the old index of each new vertex."""
        old = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(old)}
        es = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph(len(old), es), old

    def __repr__(self) -> str:
        return f"Graph({self.vertex_count}, {sorted(self.edges)})"


# ---------------------------------------------------------------------------
# constructors


def empty(n: int) -> Graph:
    return Graph(n)


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph(n, itertools.combinations(range(n), 2))


def complete_multipartite(parts: Iterable[int]) -> Graph:
    parts = list(parts)
    if not parts or any(p < 1 for p in parts):
        raise GraphError("need at least one part, each of positive size")
    owner = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(owner)
    return Graph(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if owner[u] != owner[v]])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def disjoint_union(*graphs: Graph) -> Graph:
    """Vertices of later graphs are shifted past those of earlier ones."""
    n, es = 0, []
    for g in graphs:
        es.extend((u + n, v + n) for u, v in g.edges)
        n += g.n
    return Graph(n, es)


def relabel(g: Graph, perm: list[int] | tuple[int, ...]) -> Graph:
    """Vertex ``v`` becomes ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabel needs a permutation of the vertices")
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def add_edges(g: Graph, edges: Iterable[Edge]) -> Graph:
    return Graph(g.n, list(g.edges) + list(edges))


def subdivide(g: Graph, edge: Edge, k: int = 1) -> Graph:
    """Replace ``edge`` by a path through ``k`` new vertices.

    The new vertices are ``g.n, ..., g.n + k - 1`` in order along the path
    from ``edge[0]`` to ``edge[1]``.
    """
    u, v = edge
    if not g.has_edge(u, v):
        raise GraphError(f"no edge ({u}, {v})")
    if k < 1:
        raise GraphError("k must be positive")
    chain = [u, *range(g.n, g.n + k), v]
    es = set(g.edges)
    es.discard(_norm(u, v))
    es.update(_norm(a, b) for a, b in zip(chain, chain[1:]))
    return Graph(g.n + k, es)


def attach_pendant(g: Graph, v: int) -> Graph:
    """Add vertex ``g.n`` adjacent only to ``v``."""
    if not 0 <= v < g.n:
        raise GraphError(f"no vertex {v}")
    return Graph(g.n + 1, list(g.edges) + [(v, g.n)])


# ---------------------------------------------------------------------------
# minors


@dataclass(frozen=True)
class MinorStep:
    kind: str  # "delete-edge" | "contract-edge" | "delete-vertex"
    target: Edge | int

    KINDS = ("delete-edge", "contract-edge", "delete-vertex")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise GraphError(f"unknown minor step kind {self.kind!r}")
        if self.kind == "delete-vertex":
            if not isinstance(self.target, int):
                raise GraphError("delete-vertex targets a vertex")
        else:
            u, v = self.target
            object.__setattr__(self, "target", _norm(u, v))

    def to_json(self) -> dict:
        t = self.target if isinstance(self.target, int) else list(self.target)
        return {"kind": self.kind, "target": t}

    @classmethod
    def from_json(cls, d: dict) -> MinorStep:
        t = d["target"]
        return cls(d["kind"], t if isinstance(t, int) else tuple(t))

    def __str__(self) -> str:
        t = self.target if isinstance(self.target, int) else f"{self.target[0]}-{self.target[1]}"
        return f"{self.kind} {t}"


def delete_edge(g: Graph, e: Edge) -> Graph:
    e = _norm(*e)
    if e not in g.edges:
        raise GraphError(f"no edge {e}")
    return Graph(g.n, g.edges - {e})


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove ``v`` and its edges; vertices above ``v`` shift down by one."""
    if not 0 <= v < g.n:
        raise GraphError(f"no vertex {v}")

    def f(x):
        return x - 1 if x > v else x

    return Graph(g.n - 1, [(f(a), f(b)) for a, b in g.edges if v not in (a, b)])


def contract_edge(g: Graph, e: Edge) -> Graph:
    """Merge the larger endpoint into the smaller one, dropping loops and parallels.

    The larger endpoint is then removed as in :func:`delete_vertex`.
    """
    u, v = _norm(*e)
    if (u, v) not in g.edges:
        raise GraphError(f"no edge {(u, v)}")

    def f(x):
        x = u if x == v else x
        return x - 1 if x > v else x

    es = {_norm(f(a), f(b)) for a, b in g.edges}
    es = {x for x in es if x[0] != x[1]}
    return Graph(g.n - 1, es)


def apply_minor_step(g: Graph, step: MinorStep) -> Graph:
    if step.kind == "delete-edge":
        return delete_edge(g, step.target)
    if step.kind == "contract-edge":
        return contract_edge(g, step.target)
    return delete_vertex(g, step.target)


def apply_minor_steps(g: Graph, steps: Iterable[MinorStep]) -> Graph:
    for s in steps:
        g = apply_minor_step(g, s)
    return g


def all_minor_steps(g: Graph) -> Iterator[MinorStep]:
    for e in g.sorted_edges:
        yield MinorStep("delete-edge", e)
    for e in g.sorted_edges:
        yield MinorStep("contract-edge", e)
    for v in range(g.n):
        yield MinorStep("delete-vertex", v)


def immediate_minors(g: Graph) -> list[tuple[MinorStep, Graph]]:
    """One (step, minor) per isomorphism class of single-step minors, in step order."""
    seen: set[bytes] = set()
    out = []
    for step in all_minor_steps(g):
        h = apply_minor_step(g, step)
        key = canonical_form(h)
        if key not in seen:
            seen.add(key)
            out.append((step, h))
    return out


# ---------------------------------------------------------------------------
# canonical form
#
# Components are coded separately and sorted.  A dense connected component is
# coded through its complement.  A sparse connected component goes through
# equitable refinement + individualisation, keeping the least adjacency code
# over the leaves of the search tree; automorphisms found on the way prune
# sibling branches.


def _leaf_code(order: list[int], nb: list[int]) -> int:
    code = 0
    k = len(order)
    for i in range(k):
        row = nb[order[i]]
        for j in range(i + 1, k):
            code = (code << 1) | ((row >> order[j]) & 1)
    return code


def _search_code(k: int, nb: list[int]) -> int:
    best: list = [None, None]  # code, order
    autos: list[list[int]] = []

    def orbits_fixing(path: list[int]) -> list[int]:
        parent = list(range(k))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in autos:
            if all(a[p] == p for p in path):
                for x in range(k):
                    rx, ry = find(x), find(a[x])
                    if rx != ry:
                        parent[rx] = ry
        return [find(x) for x in range(k)]

    def rec(cells: list[list[int]], path: list[int]) -> None:
        cells = refine(cells, nb)
        if len(cells) == k:
            order = [c[0] for c in cells]
            code = _leaf_code(order, nb)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            elif code == best[0]:
                a = [0] * k
                for x, y in zip(best[1], order):
                    a[x] = y
                autos.append(a)
            return
        ti = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[ti]
        done_orbits: set[int] = set()
        for v in target:
            orb = orbits_fixing(path)
            if orb[v] in done_orbits:
                continue
            done_orbits.add(orb[v])
            rest = [x for x in target if x != v]
            rec(cells[:ti] + [[v], rest] + cells[ti + 1:], path + [v])

    rec([list(range(k))], [])
    return best[0]


def _code(vertices: list[int], adj: dict[int, set[int]]) -> tuple:
    vset = set(vertices)
    seen: set[int] = set()
    comps = []
    for s in vertices:
        if s in seen:
            continue
        seen.add(s)
        comp, stack = [s], [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in vset and y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        comps.append(comp)
    if len(comps) != 1:
        return ("U", tuple(sorted(_connected_code(c, adj) for c in comps)))
    return _connected_code(comps[0], adj)


def _connected_code(vertices: list[int], adj: dict[int, set[int]]) -> tuple:
    k = len(vertices)
    if k == 1:
        return ("K", 1)
    vset = set(vertices)
    m = sum(len(adj[v] & vset) for v in vertices) // 2
    if 4 * m > k * (k - 1):
        comp = {v: (vset - adj[v]) - {v} for v in vertices}
        return ("C", _code(sorted(vertices), comp))
    pos = {v: i for i, v in enumerate(sorted(vertices))}
    nb = [0] * k
    for v in vertices:
        for w in adj[v]:
            if w in vset:
                nb[pos[v]] |= 1 << pos[w]
    return ("G", k, _search_code(k, nb))


def canonical_form(g: Graph) -> bytes:
    """Byte string equal for two graphs exactly when they are isomorphic."""
    if g.n == 0:
        return b"()"
    adj = {v: set(g.adj[v]) for v in range(g.n)}
    return repr(_code(list(range(g.n)), adj)).encode()


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(map(len, g.adj)) != sorted(map(len, h.adj)):
        return False
    return canonical_form(g) == canonical_form(h)


# ---------------------------------------------------------------------------
# minor containment


def spanning_monomorphism(h: Graph, g: Graph) -> list[int] | None:
    """Bijection f of vertices (same count) with f(e) an edge of g for each edge e of h."""
    if h.n != g.n or h.m > g.m:
        return None
    order = sorted(range(h.n), key=lambda v: -h.degree(v))
    f = [-1] * h.n
    used = [False] * g.n

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        for y in range(g.n):
            if used[y] or g.degree(y) < h.degree(x):
                continue
            if all(f[z] < 0 or f[z] in g.adj[y] for z in h.adj[x]):
                f[x], used[y] = y, True
                if rec(i + 1):
                    return True
                f[x], used[y] = -1, False
        return False

    return f if rec(0) else None


def minor_witness(g: Graph, h: Graph) -> list[MinorStep] | None:
    """Steps turning ``g`` into a graph isomorphic to ``h``, or None if ``h`` is no minor.

    Search: vertex deletions and contractions down to ``h.n`` vertices, with
    failures memoised by canonical form; then ``h`` must embed as a spanning
    subgraph, and the surplus edges are deleted.
    """
    if h.n > g.n or h.m > g.m:
        return None
    failed: set[bytes] = set()

    def rec(cur: Graph, steps: list[MinorStep]) -> list[MinorStep] | None:
        if cur.n == h.n:
            f = spanning_monomorphism(h, cur)
            if f is None:
                return None
            image = {_norm(f[a], f[b]) for a, b in h.edges}
            return steps + [MinorStep("delete-edge", e) for e in sorted(cur.edges - image)]
        key = canonical_form(cur)
        if key in failed:
            return None
        local: set[bytes] = set()
        for step in itertools.chain(
            (MinorStep("delete-vertex", v) for v in range(cur.n)),
            (MinorStep("contract-edge", e) for e in cur.sorted_edges),
        ):
            nxt = apply_minor_step(cur, step)
            if nxt.m < h.m:
                continue
            k = canonical_form(nxt)
            if k in local or k in failed:
                continue
            local.add(k)
            found = rec(nxt, steps + [step])
            if found is not None:
                return found
        failed.add(key)
        return None

    return rec(g, [])


def has_minor(g: Graph, h: Graph) -> bool:
    return minor_witness(g, h) is not None


# ---------------------------------------------------------------------------
# graph6


def to_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = [n + 63]
    elif n < 258048:
        head = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    else:
        raise GraphError("graph too large for this graph6 writer")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = [63 + int("".join(map(str, bits[i:i + 6])), 2) for i in range(0, len(bits), 6)]
    return bytes(head + body).decode("ascii")


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    data = [ord(c) - 63 for c in s]
    if not data or any(not 0 <= x < 64 for x in data):
        raise GraphError(f"invalid graph6 string {text!r}")
    if data[0] < 63:
        n, data = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        data = data[4:]
    else:
        raise GraphError("graph6 strings with n >= 258048 are not supported")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) != need:
        raise GraphError(f"graph6 body has {len(data)} bytes, expected {need}")
    bits = [(x >> (5 - i)) & 1 for x in data for i in range(6)]
    es, k = [], 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                es.append((i, j))
            k += 1
    return Graph(n, es)


# ---------------------------------------------------------------------------
# exhaustive generation


def generate_graphs(
    max_vertices: int,
    max_edges: int | None = None,
    keep: Callable[[Graph], bool] | None = None,
    min_vertices: int = 1,
) -> Iterator[Graph]:
    """All graphs with ``min_vertices..max_vertices`` vertices, one per isomorphism class.

    Graphs grow one vertex at a time (every neighbourhood of the new vertex)
    and are deduplicated by canonical form.  ``keep`` must be hereditary
    under vertex deletion (planarity is); rejected graphs are not extended.
    Output order: by vertex count, edge count, then canonical form.
    """
    if max_vertices < 1:
        return
    level = [Graph(1)]
    if keep is not None:
        level = [g for g in level if keep(g)]
    n = 1
    while True:
        if n >= min_vertices:
            yield from level
        if n == max_vertices:
            return
        found: dict[bytes, Graph] = {}
        for g in level:
            for mask in range(1 << n):
                extra = [v for v in range(n) if mask >> v & 1]
                if max_edges is not None and g.m + len(extra) > max_edges:
                    continue
                child = Graph(n + 1, list(g.edges) + [(v, n) for v in extra])
                key = canonical_form(child)
                if key in found:
                    continue
                if keep is not None and not keep(child):
                    found[key] = None
                    continue
                found[key] = child
        level = [found[k] for k in sorted(found, key=lambda k: (found[k].m if found[k] else 0, k))
                 if found[k] is not None]
        n += 1
