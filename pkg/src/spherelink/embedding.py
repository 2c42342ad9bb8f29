"""Spherical embeddings of possibly disconnected graphs.

A connected component is embedded by a rotation system (cyclic neighbour
order at every vertex).  Faces are traced on darts: the dart after
``(u, v)`` is ``(v, w)`` with ``w`` the successor of ``u`` in the rotation at
``v``.

A whole graph is embedded by an :class:`Arrangement`: a rotation for every
vertex plus the list of *global faces*.  A global face is a region of the
sphere minus the drawing; it is described by its boundaries, each of which
is one facial walk of one component (an isolated vertex ``v`` is the
degenerate boundary ``((v, v),)``).  Components and global faces form a
tree (component -- face-of-component -- global face), which is what the
equivalence certificate canonicalises.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property
from math import factorial

from .graph import Graph, GraphError
from .kernels import min_map_code

Dart = tuple[int, int]
Walk = tuple[Dart, ...]
Rotation = tuple[tuple[int, ...], ...]


class EmbeddingError(ValueError):
    pass


# ---------------------------------------------------------------------------
# rotation systems and faces


def _normalize_walk(walk: list[Dart] | tuple[Dart, ...]) -> Walk:
    i = min(range(len(walk)), key=walk.__getitem__)
    return tuple(walk[i:]) + tuple(walk[:i])


def _norm_cycle(r) -> tuple[int, ...]:
    if not r:
        return ()
    i = r.index(min(r))
    return tuple(r[i:]) + tuple(r[:i])


def trace_walks(rot: dict[int, tuple[int, ...]] | Rotation, vertices: Iterable[int]) -> list[Walk]:
    """Facial walks of the rotation restricted to ``vertices`` (one component).

    Walks start at their least dart and are sorted.  An isolated vertex gives
    the single walk ``((v, v),)``.
    """
    vertices = list(vertices)
    if len(vertices) == 1 and not rot[vertices[0]]:
        v = vertices[0]
        return [((v, v),)]
    pos = {v: {w: i for i, w in enumerate(rot[v])} for v in vertices}
    seen: set[Dart] = set()
    walks = []
    for u in sorted(vertices):
        for v in rot[u]:
            if (u, v) in seen:
                continue
            walk = []
            d = (u, v)
            while d not in seen:
                seen.add(d)
                walk.append(d)
                a, b = d
                r = rot[b]
                d = (b, r[(pos[b][a] + 1) % len(r)])
            walks.append(_normalize_walk(walk))
    walks.sort()
    return walks


@dataclass(frozen=True)
class RotationSystem:
    """Rotation system of one connected graph (its own vertex numbering)."""

    component: Graph
    rotations: Rotation

    def __post_init__(self):
        g = self.component
        if len(self.rotations) != g.n:
            raise EmbeddingError("one cyclic order per vertex required")
        for v, r in enumerate(self.rotations):
            if sorted(r) != sorted(g.adj[v]) or len(set(r)) != len(r):
                raise EmbeddingError(f"rotation at {v} is not a permutation of its neighbours")

    def faces(self) -> list[Walk]:
        return trace_faces(self)

    @property
    def euler_characteristic(self) -> int:
        g = self.component
        return g.n - g.m + len(self.faces())

    @property
    def genus(self) -> int:
        return (2 - self.euler_characteristic) // 2

    @property
    def is_spherical(self) -> bool:
        return self.euler_characteristic == 2

    def reversed(self) -> RotationSystem:
        return RotationSystem(self.component, tuple(tuple(reversed(r)) for r in self.rotations))


def trace_faces(r: RotationSystem) -> list[Walk]:
    if r.component.n == 0:
        return []
    return trace_walks(r.rotations, range(r.component.n))


def face_vertices(walk: Walk) -> set[int]:
    return {d[0] for d in walk}


def _cyclic_orders(items: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    if len(items) <= 2:
        yield items
        return
    first, rest = items[0], items[1:]
    for p in itertools.permutations(rest):
        yield (first,) + p


def rotation_systems(component: Graph) -> Iterator[RotationSystem]:
    """Every rotation system, ``prod (deg(v) - 1)!`` of them, genus unfiltered."""
    if not component.is_connected():
        raise EmbeddingError("rotation systems are defined here for connected graphs")
    orders = [list(_cyclic_orders(tuple(sorted(component.adj[v])))) for v in range(component.n)]
    for combo in itertools.product(*orders):
        yield RotationSystem(component, tuple(combo))


def rotation_system_count(component: Graph) -> int:
    out = 1
    for v in range(component.n):
        out *= factorial(max(component.degree(v) - 1, 0))
    return out


def _edge_order(g: Graph, vertices: list[int]) -> list[tuple[int, int]]:
    """Edges of a connected component so that every prefix is connected.

    Cycle-closing edges are taken as soon as both ends are present, which
    makes non-planarity show up early in the incremental search.
    """
    present = {vertices[0]}
    remaining = {e for e in g.edges if e[0] in set(vertices)}
    order = []
    while remaining:
        closing = [e for e in remaining if e[0] in present and e[1] in present]
        if closing:
            e = min(closing)
        else:
            e = min((e for e in remaining if e[0] in present or e[1] in present),
                    key=lambda e: (min(x for x in e if x in present), e))
        remaining.discard(e)
        if e[0] not in present:
            e = (e[1], e[0])
        order.append(e)
        present.update(e)
    return order


def spherical_rotations(g: Graph, vertices: list[int]) -> Iterator[dict[int, tuple[int, ...]]]:
    """Genus-0 rotation systems of the component of ``g`` on ``vertices``.

    Built edge by edge: an edge to a new vertex goes into any corner of its
    old endpoint; an edge between present vertices joins two corners of one
    common face.  Every planar rotation system of the component is produced
    exactly once (its restriction to each prefix is planar and determines
    the corner choices).
    """
    if len(vertices) == 1:
        yield {vertices[0]: ()}
        return
    order = _edge_order(g, vertices)
    rot: dict[int, list[int]] = {v: [] for v in vertices}

    def rec(i: int) -> Iterator[dict[int, tuple[int, ...]]]:
        if i == len(order):
            yield {v: tuple(r) for v, r in rot.items()}
            return
        u, v = order[i]
        if i == 0:
            rot[u].append(v)
            rot[v].append(u)
            yield from rec(1)
            rot[u].pop()
            rot[v].pop()
            return
        if not rot[v]:
            ru = rot[u]
            rot[v].append(u)
            for k in range(len(ru)):
                ru.insert(k + 1, v)
                yield from rec(i + 1)
                del ru[k + 1]
            rot[v].pop()
            return
        present = [x for x in vertices if rot[x]]
        for walk in trace_walks(rot, present):
            cu = [d[0] for d in walk if d[1] == u]
            cv = [d[0] for d in walk if d[1] == v]
            for a in cu:
                for c in cv:
                    ia = rot[u].index(a) + 1
                    rot[u].insert(ia, v)
                    ic = rot[v].index(c) + 1
                    rot[v].insert(ic, u)
                    yield from rec(i + 1)
                    del rot[v][ic]
                    del rot[u][ia]

    yield from rec(0)


def spherical_rotation_systems(component: Graph) -> Iterator[RotationSystem]:
    if component.n == 0:
        return
    if not component.is_connected():
        raise EmbeddingError("rotation systems are defined here for connected graphs")
    for rot in spherical_rotations(component, list(range(component.n))):
        yield RotationSystem(component, tuple(rot[v] for v in range(component.n)))


# ---------------------------------------------------------------------------
# canonical encoding of one embedded component


def _encode_from(rot, d0: Dart, walks: list[Walk], labels: list[str]) -> str:
    """Code of the component map rooted at dart ``d0``, faces carrying ``labels``."""
    start = d0[0]
    num = {start: 0}
    order = [start]
    ref = {start: d0[1]}
    rows = []
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        r = rot[x]
        k = r.index(ref[x])
        row = []
        for w in r[k:] + r[:k]:
            if w not in num:
                num[w] = len(order)
                order.append(w)
                ref[w] = x
            row.append(num[w])
        rows.append(row)

    def key(d: Dart) -> tuple[int, int]:
        x, y = d
        r = rot[x]
        k = r.index(ref[x])
        return num[x], (r.index(y) - k) % len(r)

    fkeys = sorted((min(key(d) for d in w), lab) for w, lab in zip(walks, labels))
    return "[" + ";".join(",".join(map(str, row)) for row in rows) + "]{" + "|".join(
        lab for _, lab in fkeys) + "}"


def map_code(rot, vertices: list[int]) -> tuple[int, ...]:
    """Orientation-preserving code of an embedded connected component.

    Roots are limited to darts with the least (tail degree, head degree,
    face length), which any orientation-preserving isomorphism respects.
    """
    vertices = sorted(vertices)
    if len(vertices) == 1:
        return ()
    local = {v: i for i, v in enumerate(vertices)}
    offsets = [0]
    nbrs: list[int] = []
    for v in vertices:
        nbrs.extend(local[w] for w in rot[v])
        offsets.append(len(nbrs))
    rev = [0] * len(nbrs)
    for x in range(len(vertices)):
        for i in range(offsets[x], offsets[x + 1]):
            w = nbrs[i]
            rev[i] = nbrs.index(x, offsets[w], offsets[w + 1]) - offsets[w]
    face_len = {}
    for w in trace_walks(rot, vertices):
        for d in w:
            face_len[d] = len(w)
    inv = []
    for x, v in enumerate(vertices):
        for i in range(offsets[x], offsets[x + 1]):
            w = vertices[nbrs[i]]
            inv.append((len(rot[v]), len(rot[w]), face_len[(v, w)]))
    least = min(inv)
    roots = [i for i, k in enumerate(inv) if k == least]
    return tuple(min_map_code(offsets, nbrs, rev, roots))


# ---------------------------------------------------------------------------
# arrangements


@dataclass(frozen=True)
class Arrangement:
    """Embedding of a whole graph in the sphere.

    ``rotation[v]`` is the cyclic neighbour order at ``v``; ``faces`` is the
    sorted tuple of global faces, each a sorted tuple of boundary walks.
    """

    graph: Graph
    rotation: Rotation
    faces: tuple[tuple[Walk, ...], ...]

    @cached_property
    def parts(self) -> list[list[int]]:
        return self.graph.components()

    @cached_property
    def part_of(self) -> list[int]:
        out = [0] * self.graph.n
        for i, p in enumerate(self.parts):
            for v in p:
                out[v] = i
        return out

    @cached_property
    def local_faces(self) -> list[list[Walk]]:
        return [trace_walks(self.rotation, p) for p in self.parts]

    @cached_property
    def face_of_boundary(self) -> dict[Walk, int]:
        return {b: i for i, f in enumerate(self.faces) for b in f}

    @cached_property
    def face_of_dart(self) -> dict[Dart, int]:
        out = {}
        for i, f in enumerate(self.faces):
            for b in f:
                for d in b:
                    if d[0] != d[1]:
                        out[d] = i
        return out

    @cached_property
    def face_of_vertex(self) -> list[int]:
        """Some global face incident to each vertex (the only one if isolated)."""
        out = [-1] * self.graph.n
        for i, f in enumerate(self.faces):
            for b in f:
                for d in b:
                    if out[d[0]] < 0:
                        out[d[0]] = i
        return out

    @cached_property
    def face_vertex_sets(self) -> list[frozenset[int]]:
        return [frozenset(d[0] for b in f for d in b) for f in self.faces]

    def part_rotation_system(self, i: int) -> RotationSystem:
        comp, old = self.graph.induced(self.parts[i])
        pos = {v: k for k, v in enumerate(old)}
        return RotationSystem(comp, tuple(tuple(pos[w] for w in self.rotation[v]) for v in old))

    @property
    def euler_characteristic(self) -> int:
        return self.graph.n - self.graph.m + len(self.faces)

    def validate(self) -> None:
        """Raise :class:`EmbeddingError` unless this is a genuine spherical arrangement."""
        g = self.graph
        if len(self.rotation) != g.n:
            raise EmbeddingError("rotation must list every vertex")
        for v, r in enumerate(self.rotation):
            if sorted(r) != sorted(g.adj[v]) or len(set(r)) != len(r):
                raise EmbeddingError(f"rotation at {v} is not a permutation of its neighbours")
        boundaries: dict[Walk, int] = {}
        for i, p in enumerate(self.parts):
            walks = self.local_faces[i]
            if len(p) - sum(1 for e in g.edges if e[0] in set(p)) + len(walks) != 2:
                raise EmbeddingError(f"component {i} is not embedded with genus 0")
            for w in walks:
                boundaries[w] = i
        listed = [b for f in self.faces for b in f]
        if sorted(listed) != sorted(boundaries):
            raise EmbeddingError("global faces must use every component face exactly once")
        for f in self.faces:
            owners = [boundaries[b] for b in f]
            if len(set(owners)) != len(owners):
                raise EmbeddingError("a global face meets a component in two faces")
        # part / global-face incidence must be a tree
        k, nf = len(self.parts), len(self.faces)
        if len(listed) != k + nf - 1:
            raise EmbeddingError("component nesting is not a tree")
        parent = list(range(k + nf))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for fi, f in enumerate(self.faces):
            for b in f:
                a, c = find(k + fi), find(boundaries[b])
                if a == c:
                    raise EmbeddingError("component nesting contains a cycle")
                parent[a] = c
        if self.euler_characteristic != 1 + k:
            raise EmbeddingError("Euler formula violated")

    def reflect(self) -> Arrangement:
        rot = tuple(_norm_cycle(tuple(reversed(r))) for r in self.rotation)

        def flip(b: Walk) -> Walk:
            if b[0][0] == b[0][1]:
                return b
            return _normalize_walk([(y, x) for x, y in reversed(b)])

        faces = tuple(sorted(tuple(sorted(flip(b) for b in f)) for f in self.faces))
        return Arrangement(self.graph, rot, faces)

    def relabel(self, perm: list[int]) -> Arrangement:
        """Image under the vertex map ``v -> perm[v]``."""
        from .graph import relabel

        g = relabel(self.graph, perm)
        rot: list[tuple[int, ...]] = [()] * g.n
        for v, r in enumerate(self.rotation):
            rot[perm[v]] = _norm_cycle(tuple(perm[w] for w in r))

        def move(b: Walk) -> Walk:
            return _normalize_walk([(perm[x], perm[y]) for x, y in b])

        faces = tuple(sorted(tuple(sorted(move(b) for b in f)) for f in self.faces))
        return Arrangement(g, tuple(rot), faces)

    # -- canonical certificate -------------------------------------------

    def _code(self) -> str:
        parts, walks = self.parts, self.local_faces
        face_of = self.face_of_boundary
        rot = self.rotation
        part_memo: dict[tuple[int, int], str] = {}
        face_memo: dict[tuple[int, Walk | None], str] = {}

        def code_face(fi: int, exclude: Walk | None) -> str:
            key = (fi, exclude)
            if key not in face_memo:
                kids = []
                for b in self.faces[fi]:
                    if b == exclude:
                        continue
                    p = self.part_of[b[0][0]]
                    kids.append(code_part(p, walks[p].index(b)))
                face_memo[key] = "(" + ",".join(sorted(kids)) + ")"
            return face_memo[key]

        def code_part(p: int, j: int) -> str:
            key = (p, j)
            if key not in part_memo:
                ws = walks[p]
                if ws[0][0][0] == ws[0][0][1]:
                    part_memo[key] = "o"
                else:
                    labels = ["*" if i == j else code_face(face_of[w], w) for i, w in enumerate(ws)]
                    part_memo[key] = min(_encode_from(rot, d, ws, labels) for d in ws[j])
            return part_memo[key]

        return min(code_face(i, None) for i in range(len(self.faces)))

    def certificate(self, reflection: bool = True) -> bytes:
        """Canonical encoding, equal for equivalent arrangements.

        With ``reflection`` an arrangement and its mirror image share a
        certificate.
        """
        code = self._code()
        if reflection:
            code = min(code, self.reflect()._code())
        return code.encode()

    # -- placements and text form -----------------------------------------

    def placements(self) -> list[tuple[int, int, int]]:
        """(part, global face, own face index) for every part after part 0.

        Parts are listed in breadth-first order from part 0 through the
        nesting tree, so each placement refers to a face that already
        exists when the parts are inserted in this order.
        """
        out = []
        if not self.parts:
            return out
        seen_parts = {0}
        seen_faces: set[int] = set()
        queue = [0]
        while queue:
            p = queue.pop(0)
            for w in self.local_faces[p]:
                fi = self.face_of_boundary[w]
                if fi in seen_faces:
                    continue
                seen_faces.add(fi)
                for b in self.faces[fi]:
                    q = self.part_of[b[0][0]]
                    if q not in seen_parts:
                        seen_parts.add(q)
                        out.append((q, fi, self.local_faces[q].index(b)))
                        queue.append(q)
        return out

    def to_text(self) -> str:
        lines = [f"arrangement {self.graph.n}"]
        for v, r in enumerate(self.rotation):
            lines.append(f"rot {v}: {' '.join(map(str, r))}".rstrip())
        for p, fi, j in self.placements():
            lines.append(f"place {p} in-face {fi} outward {j}")
        for fi, f in enumerate(self.faces):
            lines.append(f"face {fi}: " + " | ".join(_walk_text(b) for b in f))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> Arrangement:
        n = None
        rot: dict[int, tuple[int, ...]] = {}
        faces: dict[int, list[Walk]] = {}
        places = []
        for ln, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            head, _, rest = line.partition(" ")
            try:
                if head == "arrangement":
                    n = int(rest)
                elif head == "rot":
                    v, _, nbrs = rest.partition(":")
                    rot[int(v)] = tuple(int(x) for x in nbrs.split())
                elif head == "face":
                    i, _, body = rest.partition(":")
                    faces[int(i)] = [_parse_walk(t) for t in body.split("|")] if body.strip() else []
                elif head == "place":
                    tok = rest.split()
                    places.append((int(tok[0]), int(tok[2]), int(tok[4])))
                else:
                    raise ValueError(f"unknown record {head!r}")
            except (ValueError, IndexError) as exc:
                raise EmbeddingError(f"line {ln}: {exc}") from None
        if n is None or sorted(rot) != list(range(n)):
            raise EmbeddingError("arrangement text must give n and a rotation for every vertex")
        if sorted(faces) != list(range(len(faces))):
            raise EmbeddingError("face ids must be 0..k-1")
        try:
            g = Graph(n, [(u, v) for u in rot for v in rot[u] if u < v])
        except GraphError as exc:
            raise EmbeddingError(str(exc)) from None
        rotation = tuple(_norm_cycle(rot[v]) for v in range(n))
        fs = tuple(sorted(tuple(sorted(faces[i])) for i in range(len(faces))))
        arr = cls(g, rotation, fs)
        arr.validate()
        if places and places != arr.placements():
            raise EmbeddingError("placement records disagree with the face records")
        return arr


def _walk_text(b: Walk) -> str:
    if b[0][0] == b[0][1]:
        return str(b[0][0])
    return " ".join(f"{x}>{y}" for x, y in b)


def _parse_walk(t: str) -> Walk:
    toks = t.split()
    if len(toks) == 1 and ">" not in toks[0]:
        v = int(toks[0])
        return ((v, v),)
    walk = []
    for tok in toks:
        a, b = tok.split(">")
        walk.append((int(a), int(b)))
    return _normalize_walk(walk)


# ---------------------------------------------------------------------------
# enumeration


def _part_rotation_reps(g: Graph, part: list[int]) -> list[dict[int, tuple[int, ...]]]:
    """One genus-0 rotation per class under automorphisms of the component.

    Only orientation-preserving equivalence is used here, since reflection
    has to act on all components at once.
    """
    seen: dict[tuple, dict] = {}
    for rot in spherical_rotations(g, part):
        key = map_code(rot, part)
        if key not in seen:
            seen[key] = rot
    return list(seen.values())


def _nestings(part_walks: list[list[Walk]]) -> Iterator[list[list[Walk]]]:
    """Every nesting of components that each have at least two faces.

    Components are inserted in order; the newcomer goes into one global face
    and each boundary already in that face is handed to one of the
    newcomer's faces.  Each labelled nesting arises exactly once.
    """
    if not part_walks:
        yield [[]]
        return

    def rec(i: int, gfaces: list[list[Walk]]) -> Iterator[list[list[Walk]]]:
        if i == len(part_walks):
            yield gfaces
            return
        ws = part_walks[i]
        for gi, gf in enumerate(gfaces):
            others = gfaces[:gi] + gfaces[gi + 1:]
            for assign in itertools.product(range(len(ws)), repeat=len(gf)):
                new = [[w] + [b for b, a in zip(gf, assign) if a == j] for j, w in enumerate(ws)]
                yield from rec(i + 1, others + new)

    yield from rec(1, [[w] for w in part_walks[0]])


def raw_arrangements(g: Graph, labelled: bool = False) -> Iterator[Arrangement]:
    """Arrangements covering every equivalence class (with repetitions).

    With ``labelled`` every labelled arrangement is produced exactly once
    instead: all rotations of each component, and isolated vertices placed
    individually.  Empty if ``g`` is not planar.
    """
    parts = g.components()
    reps = []
    for p in parts:
        r = list(spherical_rotations(g, p)) if labelled else _part_rotation_reps(g, p)
        if not r:
            return
        reps.append(r)
    if not parts:
        yield Arrangement(g, (), ((),))
        return
    isolated = [i for i, p in enumerate(parts) if len(p) == 1]
    for combo in itertools.product(*reps):
        rot: list[tuple[int, ...]] = [()] * g.n
        for r in combo:
            for v, nb in r.items():
                rot[v] = nb
        rotation = tuple(_norm_cycle(r) for r in rot)
        walks = [trace_walks(rotation, p) for p in parts]
        cyclic = [i for i in range(len(parts)) if len(walks[i]) > 1]
        trees = [i for i in range(len(parts)) if len(walks[i]) == 1 and i not in isolated]
        for skel in _nestings([walks[i] for i in cyclic]):
            nf = len(skel)
            for tree_at in itertools.product(range(nf), repeat=len(trees)):
                iso_choices = (itertools.product(range(nf), repeat=len(isolated)) if labelled
                               else itertools.combinations_with_replacement(range(nf), len(isolated)))
                for iso_at in iso_choices:
                    gf = [list(f) for f in skel]
                    for i, fi in zip(trees, tree_at):
                        gf[fi].append(walks[i][0])
                    for i, fi in zip(isolated, iso_at):
                        gf[fi].append(walks[i][0])
                    faces = tuple(sorted(tuple(sorted(f)) for f in gf))
                    yield Arrangement(g, rotation, faces)


def spherical_arrangements(g: Graph, reflection_equivalence: bool = True) -> list[Arrangement]:
    """All arrangements of ``g`` up to equivalence, sorted by certificate."""
    found: dict[bytes, Arrangement] = {}
    for a in raw_arrangements(g):
        c = a.certificate(reflection_equivalence)
        if c not in found:
            found[c] = a
    return [found[c] for c in sorted(found)]


def equivalent(a: Arrangement, b: Arrangement, reflection: bool = True) -> bool:
    return a.certificate(reflection) == b.certificate(reflection)


# ---------------------------------------------------------------------------
# planarity


def _component_is_planar(g: Graph, part: list[int]) -> bool:
    if len(part) >= 3:
        m = sum(1 for e in g.edges if e[0] in set(part))
        if m > 3 * len(part) - 6:
            return False
    return next(spherical_rotations(g, part), None) is not None


def is_planar(g: Graph) -> bool:
    return all(_component_is_planar(g, p) for p in g.components())


def is_outerplanar(g: Graph) -> bool:
    """Some arrangement has a global face meeting every vertex.

    Components are independent here: put every component in one common
    face, using for each a rotation with a face that meets all its vertices.
    """
    for p in g.components():
        if len(p) >= 2 and sum(1 for e in g.edges if e[0] in set(p)) > 2 * len(p) - 3:
            return False
        if not any(any(face_vertices(w) >= set(p) for w in trace_walks(rot, p))
                   for rot in spherical_rotations(g, p)):
            return False
    return True


def with_points(a: Arrangement, face: int, count: int) -> Arrangement:
    """Add ``count`` isolated vertices (numbered after the old ones) inside ``face``."""
    from .graph import disjoint_union, empty

    n = a.graph.n
    g = disjoint_union(a.graph, empty(count))
    rotation = a.rotation + ((),) * count
    faces = list(a.faces)
    faces[face] = tuple(sorted(faces[face] + tuple(((v, v),) for v in range(n, n + count))))
    return Arrangement(g, rotation, tuple(sorted(faces)))
