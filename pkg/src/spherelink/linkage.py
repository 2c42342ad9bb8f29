"""Spherical links inside an arrangement.

A link is a set of *pieces*: vertex-disjoint cycles (circles) and vertex
pairs (0-spheres).  It is split when a simple closed curve in the sphere
minus the link has whole, nonempty collections of pieces on both sides.

The complement of the piece cycles is a union of *regions*; regions and
cycles form a tree.  A separating curve lives in one region, where it can
realise any bipartition of that region's boundary circles and loose points,
so the link is split exactly when, in some region, the boundary circles and
points fall into at least two classes once the two ends of every point
pair are glued together.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .embedding import Arrangement
from .graph import Graph
from .kernels import face_classes

Cycle = tuple[int, ...]
Pair = tuple[int, int]

SHAPES = ("2link", "type1", "type2")


class LinkError(ValueError):
    pass


def normalize_cycle(c: Iterable[int]) -> Cycle:
    """Rotate to the least vertex, then orient towards its smaller neighbour."""
    c = tuple(c)
    i = c.index(min(c))
    c = c[i:] + c[:i]
    if len(c) > 2 and c[-1] < c[1]:
        c = (c[0],) + tuple(reversed(c[1:]))
    return c


def cycle_edges(c: Cycle) -> set[tuple[int, int]]:
    return {(min(a, b), max(a, b)) for a, b in zip(c, c[1:] + c[:1])}


def cycles(g: Graph) -> list[Cycle]:
    """Every simple cycle once, normalised and sorted."""
    out = []
    adj = [sorted(a) for a in g.adj]
    for s in range(g.n):
        path = [s]
        on = {s}

        def rec(x: int) -> None:
            for y in adj[x]:
                if y == s and len(path) >= 3 and path[1] < path[-1]:
                    out.append(tuple(path))
                elif y > s and y not in on:
                    path.append(y)
                    on.add(y)
                    rec(y)
                    path.pop()
                    on.discard(y)

        rec(s)
    return sorted(out)


@dataclass(frozen=True)
class LinkPieces:
    cycles: tuple[Cycle, ...] = ()
    point_pairs: tuple[Pair, ...] = ()

    @classmethod
    def make(cls, cycles: Iterable[Iterable[int]] = (), pairs: Iterable[Iterable[int]] = ()) -> LinkPieces:
        cs = tuple(sorted(normalize_cycle(c) for c in cycles))
        ps = tuple(sorted(tuple(sorted(p)) for p in pairs))
        return cls(cs, ps)

    @property
    def vertices(self) -> list[int]:
        return [v for c in self.cycles for v in c] + [v for p in self.point_pairs for v in p]

    def __len__(self) -> int:
        return len(self.cycles) + len(self.point_pairs)

    def validate(self, g: Graph) -> None:
        vs = self.vertices
        if len(set(vs)) != len(vs):
            raise LinkError("pieces must be vertex-disjoint")
        for v in vs:
            if not 0 <= v < g.n:
                raise LinkError(f"vertex {v} out of range")
        for c in self.cycles:
            if len(c) < 3:
                raise LinkError("a cycle needs at least 3 vertices")
            for u, v in cycle_edges(c):
                if not g.has_edge(u, v):
                    raise LinkError(f"cycle {c} uses a non-edge {u}-{v}")
        for p in self.point_pairs:
            if len(p) != 2 or p[0] == p[1]:
                raise LinkError("a point pair needs two distinct vertices")

    @property
    def shape(self) -> str | None:
        key = (len(self.cycles), len(self.point_pairs))
        return {(1, 1): "2link", (2, 1): "type1", (1, 2): "type2"}.get(key)

    def to_text(self) -> str:
        lines = [f"cycle: {' '.join(map(str, c))}" for c in self.cycles]
        lines += [f"s0: {u} {v}" for u, v in self.point_pairs]
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str) -> LinkPieces:
        cs, ps = [], []
        for line in text.splitlines():
            line = line.strip()
            if line.startswith("cycle:"):
                cs.append([int(x) for x in line[6:].split()])
            elif line.startswith("s0:"):
                ps.append([int(x) for x in line[3:].split()])
            elif line:
                raise LinkError(f"unrecognised piece line {line!r}")
        return cls.make(cs, ps)

    def to_json(self) -> dict:
        return {"cycles": [list(c) for c in self.cycles], "s0": [list(p) for p in self.point_pairs]}

    @classmethod
    def from_json(cls, d: dict) -> LinkPieces:
        return cls.make(d.get("cycles", []), d.get("s0", []))


# ---------------------------------------------------------------------------
# sides and regions


def _face_edge_pairs(a: Arrangement) -> list[tuple[int, int, int, int]]:
    """(u, v, face on the left of u->v, face on the left of v->u) per edge."""
    f = a.face_of_dart
    return [(u, v, f[(u, v)], f[(v, u)]) for u, v in a.graph.sorted_edges]


class _Sides:
    """Face classes of the sphere cut along a set of edges, cached per arrangement."""

    def __init__(self, a: Arrangement):
        self.a = a
        self.edges = _face_edge_pairs(a)
        self.eu = [e[0] for e in self.edges]
        self.ev = [e[1] for e in self.edges]
        self.f1 = [e[2] for e in self.edges]
        self.f2 = [e[3] for e in self.edges]
        self.index = {(e[0], e[1]): i for i, e in enumerate(self.edges)}
        self.cache: dict[Cycle, list[int]] = {}

    def classes(self, cut: set[tuple[int, int]]) -> list[int]:
        mask = [1 if (u, v) in cut else 0 for u, v in zip(self.eu, self.ev)]
        return face_classes(len(self.a.faces), self.f1, self.f2, mask)

    def of_cycle(self, c: Cycle) -> list[int]:
        """Side label (0 or 1) of every global face."""
        if c not in self.cache:
            lab = self.classes(cycle_edges(c))
            first = lab[0]
            side = [0 if x == first else 1 for x in lab]
            if len(set(lab)) != 2:
                raise LinkError(f"cycle {c} does not cut the sphere in two")
            self.cache[c] = side
        return self.cache[c]

    def vertex_sides(self, c: Cycle) -> tuple[list[int], list[int]]:
        side = self.of_cycle(c)
        on = set(c)
        fv = self.a.face_of_vertex
        a, b = [], []
        for v in range(self.a.graph.n):
            if v not in on:
                (a if side[fv[v]] == 0 else b).append(v)
        return a, b


def _sides_for(a: Arrangement) -> _Sides:
    s = a.__dict__.get("_sides")
    if s is None:
        s = _Sides(a)
        object.__setattr__(a, "_sides", s)
    return s


def sides(a: Arrangement, c: Iterable[int]) -> tuple[tuple[set[int], set[int]], tuple[set[int], set[int]]]:
    """Faces and off-cycle vertices on each side of the cycle ``c``.

    Returns ``((faces0, faces1), (vertices0, vertices1))`` where side 0 holds
    the least-numbered global face.
    """
    c = normalize_cycle(c)
    for u, v in cycle_edges(c):
        if not a.graph.has_edge(u, v):
            raise LinkError(f"{c} is not a cycle of the graph")
    if len(c) < 3 or len(set(c)) != len(c):
        raise LinkError(f"{c} is not a cycle of the graph")
    sd = _sides_for(a)
    side = sd.of_cycle(c)
    f0 = {i for i, s in enumerate(side) if s == 0}
    f1 = {i for i, s in enumerate(side) if s == 1}
    v0, v1 = sd.vertex_sides(c)
    return (f0, f1), (set(v0), set(v1))


@dataclass
class RegionStructure:
    """Regions of the sphere minus the piece cycles.

    ``region_of_face[f]`` numbers the regions; ``borders[r]`` lists the
    piece cycles on the boundary of region ``r``; ``points[r]`` lists the
    pair vertices inside it; ``beyond[(r, c)]`` is the set of pieces on the
    far side of cycle ``c`` seen from region ``r`` (cycles by tuple, pairs by
    tuple).
    """

    region_of_face: list[int]
    borders: list[list[Cycle]]
    points: list[list[int]]
    beyond: dict[tuple[int, Cycle], set]

    @property
    def count(self) -> int:
        return len(self.borders)


def build_regions(a: Arrangement, p: LinkPieces) -> RegionStructure:
    p.validate(a.graph)
    sd = _sides_for(a)
    cut = set()
    for c in p.cycles:
        cut |= cycle_edges(c)
    lab = sd.classes(cut)
    ids: dict[int, int] = {}
    region = [ids.setdefault(x, len(ids)) for x in lab]
    k = len(ids)
    borders: list[list[Cycle]] = [[] for _ in range(k)]
    fv = a.face_of_vertex
    side_of = {c: sd.of_cycle(c) for c in p.cycles}
    for c in p.cycles:
        side = side_of[c]
        touching = {region[a.face_of_dart[(x, y)]] for x, y in zip(c, c[1:] + c[:1])}
        touching |= {region[a.face_of_dart[(y, x)]] for x, y in zip(c, c[1:] + c[:1])}
        for r in sorted(touching):
            borders[r].append(c)
    points: list[list[int]] = [[] for _ in range(k)]
    for pair in p.point_pairs:
        for v in pair:
            points[region[fv[v]]].append(v)
    face_in = [region.index(r) for r in range(k)]

    def location(piece) -> int:
        """A face on which to judge the side of a piece."""
        if len(piece) == 2 and piece in p.point_pairs:
            return fv[piece[0]]
        # any face next to the cycle lies on the same side of every other cycle
        return a.face_of_dart[(piece[0], piece[1])]

    beyond: dict[tuple[int, Cycle], set] = {}
    for r in range(k):
        for c in borders[r]:
            side = side_of[c]
            far = 1 - side[face_in[r]]
            got = {c}
            for d in p.cycles:
                if d != c and side[location(d)] == far:
                    got.add(d)
            for pair in p.point_pairs:
                if side[fv[pair[0]]] == far or side[fv[pair[1]]] == far:
                    got.add(pair)
            beyond[(r, c)] = got
    return RegionStructure(region, borders, points, beyond)


def _region_items(a: Arrangement, p: LinkPieces, rs: RegionStructure, r: int) -> int:
    """Number of classes among region ``r``'s boundary circles and points."""
    sd = _sides_for(a)
    fv = a.face_of_vertex
    face_in = rs.region_of_face.index(r)
    holes = rs.borders[r]
    items: dict[object, object] = {}

    def find(x):
        while items[x] != x:
            items[x] = items[items[x]]
            x = items[x]
        return x

    for h in holes:
        items[("h", h)] = ("h", h)
    for v in rs.points[r]:
        items[("p", v)] = ("p", v)

    def item_of(v: int):
        if rs.region_of_face[fv[v]] == r:
            return ("p", v)
        for h in holes:
            side = sd.of_cycle(h)
            if side[fv[v]] != side[face_in]:
                return ("h", h)
        raise AssertionError("point outside every hole")

    for u, v in p.point_pairs:
        x, y = find(item_of(u)), find(item_of(v))
        if x != y:
            items[x] = y
    return len({find(x) for x in items})


def is_nonsplit(a: Arrangement, p: LinkPieces) -> bool:
    rs = build_regions(a, p)
    return all(_region_items(a, p, rs, r) <= 1 for r in range(rs.count))


def is_nested(a: Arrangement, p: LinkPieces) -> bool:
    """Type-I pieces drawn as point | circle | circle | point.

    True when some face can serve as the point at infinity so that one
    circle's disk contains the other's, one point lies in the inner disk and
    the other outside the outer disk.
    """
    if p.shape != "type1":
        return False
    sd = _sides_for(a)
    c1, c2 = p.cycles
    u, v = p.point_pairs[0]
    fv = a.face_of_vertex
    s1, s2 = sd.of_cycle(c1), sd.of_cycle(c2)
    loc1 = a.face_of_dart[(c1[0], c1[1])]
    loc2 = a.face_of_dart[(c2[0], c2[1])]
    for inf in range(len(a.faces)):
        for s_in, s_out, loc_in, loc_out in ((s1, s2, loc1, loc2), (s2, s1, loc2, loc1)):
            # inner disk inside the outer one: the inner circle is in the outer
            # disk and the outer circle is outside the inner disk
            if s_out[loc_in] == s_out[inf] or s_in[loc_out] != s_in[inf]:
                continue
            for x, y in ((u, v), (v, u)):
                if s_in[fv[x]] != s_in[inf] and s_out[fv[y]] == s_out[inf]:
                    return True
    return False


# ---------------------------------------------------------------------------
# link search


def _pairs_across(a_side: list[int], b_side: list[int]) -> list[Pair]:
    return sorted((min(x, y), max(x, y)) for x in a_side for y in b_side)


def iter_links(a: Arrangement, shape: str, nested_only: bool = False) -> Iterator[LinkPieces]:
    """Non-split links of ``shape`` in a deterministic order.

    Candidates come from the side structure of each cycle and every one is
    confirmed with :func:`is_nonsplit`.
    """
    if shape not in SHAPES:
        raise LinkError(f"unknown link shape {shape!r}")
    cs = a.__dict__.get("_cycles")
    if cs is None:
        cs = cycles(a.graph)
        object.__setattr__(a, "_cycles", cs)
    if not cs:
        return
    sd = _sides_for(a)
    if shape == "2link":
        for c in cs:
            x, y = sd.vertex_sides(c)
            for pair in _pairs_across(x, y):
                lp = LinkPieces((c,), (pair,))
                if is_nonsplit(a, lp):
                    yield lp
    elif shape == "type2":
        for c in cs:
            x, y = sd.vertex_sides(c)
            pairs = _pairs_across(x, y)
            for p1, p2 in itertools.combinations(pairs, 2):
                if len({*p1, *p2}) == 4:
                    lp = LinkPieces((c,), (p1, p2))
                    if is_nonsplit(a, lp):
                        yield lp
    else:
        for c1, c2 in itertools.combinations(cs, 2):
            if set(c1) & set(c2):
                continue
            on = set(c1) | set(c2)
            x1, _ = sd.vertex_sides(c1)
            x2, _ = sd.vertex_sides(c2)
            x1, x2 = set(x1), set(x2)
            free = [v for v in range(a.graph.n) if v not in on]
            for u, v in itertools.combinations(free, 2):
                if (u in x1) != (v in x1) and (u in x2) != (v in x2):
                    lp = LinkPieces((c1, c2), ((u, v),))
                    if nested_only and not is_nested(a, lp):
                        continue
                    if is_nonsplit(a, lp):
                        yield lp


def find_links(a: Arrangement, shape: str, nested_only: bool = False) -> list[LinkPieces]:
    return sorted(iter_links(a, shape, nested_only), key=_witness_key)


def is_linked(a: Arrangement, shape: str, nested_only: bool = False) -> bool:
    return next(iter_links(a, shape, nested_only), None) is not None


def first_link(a: Arrangement, shape: str, nested_only: bool = False) -> LinkPieces | None:
    return next(iter_links(a, shape, nested_only), None)


def _witness_key(lp: LinkPieces):
    return (lp.cycles, lp.point_pairs)


# ---------------------------------------------------------------------------
# independent separation oracle


def separable_by_cells(a: Arrangement, p: LinkPieces) -> bool:
    """Split test on the cell complex of the arrangement.

    The sphere is the disjoint union of open cells (vertices, edges, global
    faces).  Complements are computed by gluing adjacent cells that both
    avoid the removed pieces.  A bipartition S | T of the pieces can be
    separated by a curve exactly when S lies in one component of the
    complement of T and T lies in one component of the complement of S.
    """
    p.validate(a.graph)
    g = a.graph
    n, m = g.n, g.m
    edges = list(g.sorted_edges)
    eid = {e: i for i, e in enumerate(edges)}
    fd = a.face_of_dart
    pieces: list[tuple[set[int], set[int]]] = []  # (vertex cells, edge cells)
    for c in p.cycles:
        pieces.append((set(c), {eid[e] for e in cycle_edges(c)}))
    for pair in p.point_pairs:
        pieces.append((set(pair), set()))
    k = len(pieces)

    def components(removed_v: set[int], removed_e: set[int]) -> list[int]:
        parent = list(range(n + m + len(a.faces)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def join(x, y):
            parent[find(x)] = find(y)

        for i, (u, v) in enumerate(edges):
            if i in removed_e:
                continue
            for w in (u, v):
                if w not in removed_v:
                    join(n + i, w)
            join(n + i, n + m + fd[(u, v)])
            join(n + i, n + m + fd[(v, u)])
        for v in range(n):
            if v in removed_v:
                continue
            if g.degree(v) == 0:
                join(v, n + m + a.face_of_vertex[v])
            # a vertex touches every face around it; those are already joined
            # through its incident edges, which are present whenever v is
        return [find(x) for x in range(n + m + len(a.faces))]

    def cells(idx: Iterable[int]) -> list[int]:
        out = []
        for i in idx:
            vs, es = pieces[i]
            out += list(vs) + [n + e for e in es]
        return out

    for mask in range(1, 1 << k):
        if mask & 1 == 0 or mask == (1 << k) - 1:
            continue  # each bipartition once, with piece 0 in S
        s = [i for i in range(k) if mask >> i & 1]
        t = [i for i in range(k) if not mask >> i & 1]
        ok = True
        for inside, outside in ((s, t), (t, s)):
            rv = set().union(*(pieces[i][0] for i in outside))
            re_ = set().union(*(pieces[i][1] for i in outside))
            comp = components(rv, re_)
            if len({comp[x] for x in cells(inside)}) != 1:
                ok = False
                break
        if ok:
            return True
    return False
