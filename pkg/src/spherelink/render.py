"""SVG drawings of arrangements.

Each component with a cycle is drawn by Tutte's barycentric method on its
refinement: a node per vertex, per edge midpoint and per face, with a
triangle of the outward face pinned to the outside.  Edges come out as
two-segment polylines through their midpoints.  Trees get a layered layout.
Components nested in a face are drawn in disks around that face's centre,
small enough to stay off the face boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .embedding import Arrangement, Walk

Point = tuple[float, float]


@dataclass
class Drawing:
    vertices: dict[int, Point] = field(default_factory=dict)
    edges: dict[tuple[int, int], list[Point]] = field(default_factory=dict)

    def segments(self) -> list[tuple[Point, Point, tuple[int, int]]]:
        out = []
        for e, pts in self.edges.items():
            for p, q in zip(pts, pts[1:]):
                out.append((p, q, e))
        return out


def _tutte(nodes: list, adj: dict, fixed: dict[object, Point], tol: float) -> dict[object, Point]:
    pos = dict(fixed)
    cx = sum(p[0] for p in fixed.values()) / len(fixed)
    cy = sum(p[1] for p in fixed.values()) / len(fixed)
    free = [x for x in nodes if x not in fixed]
    for x in free:
        pos[x] = (cx, cy)
    for _ in range(50000):
        moved = 0.0
        for x in free:
            nb = adj[x]
            nx = sum(pos[y][0] for y in nb) / len(nb)
            ny = sum(pos[y][1] for y in nb) / len(nb)
            moved = max(moved, abs(nx - pos[x][0]) + abs(ny - pos[x][1]))
            pos[x] = (nx, ny)
        if moved < tol:
            break
    return pos


def _dist_to_segment(p: Point, a: Point, b: Point) -> float:
    ax, ay = a
    bx, by = b
    dx, dy = bx - ax, by - ay
    ll = dx * dx + dy * dy
    t = 0.0 if ll == 0 else max(0.0, min(1.0, ((p[0] - ax) * dx + (p[1] - ay) * dy) / ll))
    return math.hypot(p[0] - ax - t * dx, p[1] - ay - t * dy)


class _Layout:
    def __init__(self, a: Arrangement):
        self.a = a
        self.d = Drawing()

    def draw_tree(self, p: list[int], cx: float, cy: float, r: float) -> None:
        rot = self.a.rotation
        root = min(p)
        children: dict[int, list[int]] = {root: []}
        depth = {root: 0}
        queue = [root]
        while queue:
            x = queue.pop(0)
            for y in rot[x]:
                if y not in depth:
                    depth[y] = depth[x] + 1
                    children[x].append(y)
                    children[y] = []
                    queue.append(y)
        leaves: dict[int, float] = {}
        counter = [0]

        def xpos(x: int) -> float:
            if not children[x]:
                leaves[x] = counter[0]
                counter[0] += 1
                return leaves[x]
            xs = [xpos(y) for y in children[x]]
            leaves[x] = sum(xs) / len(xs)
            return leaves[x]

        xpos(root)
        side = r * math.sqrt(2) * 0.9
        nx = max(counter[0] - 1, 1)
        nd = max(max(depth.values()), 1)
        for v in p:
            fx = leaves[v] / nx if counter[0] > 1 else 0.5
            self.d.vertices[v] = (cx - side / 2 + side * fx, cy - side / 2 + side * depth[v] / nd)
        for x in p:
            for y in children[x]:
                self.d.edges[(min(x, y), max(x, y))] = [self.d.vertices[x], self.d.vertices[y]]

    def draw_cyclic(self, pi: int, outward: Walk, cx: float, cy: float, r: float) -> dict[Walk, tuple[Point, float]]:
        a = self.a
        p = a.parts[pi]
        walks = a.local_faces[pi]
        adj: dict[object, set] = {}

        def link(x, y):
            adj.setdefault(x, set()).add(y)
            adj.setdefault(y, set()).add(x)

        for wi, w in enumerate(walks):
            for u, v in w:
                e = (min(u, v), max(u, v))
                link(("v", u), ("m", e))
                link(("m", e), ("f", wi))
                link(("v", u), ("f", wi))
        nodes = sorted(adj, key=repr)
        oi = walks.index(outward)
        u0, v0 = outward[0]
        e0 = (min(u0, v0), max(u0, v0))
        corners = [("f", oi), ("v", u0), ("m", e0)]
        fixed = {}
        for k, node in enumerate(corners):
            ang = math.pi / 2 + 2 * math.pi * k / 3
            fixed[node] = (cx + r * math.cos(ang), cy + r * math.sin(ang))
        pos = _tutte(nodes, {x: sorted(adj[x], key=repr) for x in adj}, fixed, 1e-12 * max(r, 1e-9))
        for v in p:
            self.d.vertices[v] = pos[("v", v)]
        for w in walks:
            for u, v in w:
                e = (min(u, v), max(u, v))
                self.d.edges[e] = [pos[("v", e[0])], pos[("m", e)], pos[("v", e[1])]]
        room = {}
        for wi, w in enumerate(walks):
            if wi == oi:
                continue
            c = pos[("f", wi)]
            segs = []
            for u, v in w:
                e = (min(u, v), max(u, v))
                segs += [(pos[("v", u)], pos[("m", e)]), (pos[("m", e)], pos[("v", v)])]
            room[w] = (c, 0.45 * min(_dist_to_segment(c, s, t) for s, t in segs))
        return room

    def draw_part(self, pi: int, outward: Walk, cx: float, cy: float, r: float) -> None:
        a = self.a
        p = a.parts[pi]
        walks = a.local_faces[pi]
        if len(p) == 1:
            self.d.vertices[p[0]] = (cx, cy)
            return
        if len(walks) == 1:
            self.draw_tree(p, cx, cy, r)
            return
        room = self.draw_cyclic(pi, outward, cx, cy, r)
        for w, (c, rad) in room.items():
            self.fill(a.face_of_boundary[w], w, c[0], c[1], rad)

    def fill(self, fi: int, exclude: Walk, cx: float, cy: float, r: float) -> None:
        members = [b for b in self.a.faces[fi] if b != exclude]
        k = len(members)
        for i, b in enumerate(members):
            q = self.a.part_of[b[0][0]]
            sub = r / k
            self.draw_part(q, b, cx - r + sub * (2 * i + 1), cy, sub * 0.9)


def _outer_choice(a: Arrangement) -> tuple[int, Walk]:
    """A part and outward walk so that, if possible, every other part nests inside."""
    for pi, walks in enumerate(a.local_faces):
        if len(walks) < 2:
            continue
        for w in walks:
            if len(a.faces[a.face_of_boundary[w]]) == 1:
                return pi, w
    walks = a.local_faces[0]
    return 0, max(walks, key=lambda w: (len(w), [-x for d in w for x in d]))


def layout(a: Arrangement) -> Drawing:
    lay = _Layout(a)
    if not a.parts:
        return lay.d
    root, outward = _outer_choice(a)
    lay.draw_part(root, outward, 0.0, 0.0, 1.0)
    fo = a.face_of_boundary[outward]
    others = [b for b in a.faces[fo] if b != outward]
    for i, b in enumerate(others):
        q = a.part_of[b[0][0]]
        lay.draw_part(q, b, 2.4 * (i + 1), 0.0, 1.0)
    return lay.d


def _cross(p: Point, q: Point, r: Point) -> float:
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def segments_cross(a1: Point, a2: Point, b1: Point, b2: Point, eps: float = 1e-9) -> bool:
    """Proper crossing or overlap of two segments, shared endpoints excepted."""
    shared = [p for p in (a1, a2) for q in (b1, b2) if math.dist(p, q) < eps]
    d1, d2 = _cross(b1, b2, a1), _cross(b1, b2, a2)
    d3, d4 = _cross(a1, a2, b1), _cross(a1, a2, b2)
    if shared:
        # touching at a common endpoint is fine unless the segments overlap
        if abs(d1) < eps and abs(d2) < eps:
            s = shared[0]
            o1 = a2 if math.dist(a1, s) < eps else a1
            o2 = b2 if math.dist(b1, s) < eps else b1
            return (o1[0] - s[0]) * (o2[0] - s[0]) + (o1[1] - s[1]) * (o2[1] - s[1]) > eps
        return False
    if ((d1 > eps and d2 < -eps) or (d1 < -eps and d2 > eps)) and \
            ((d3 > eps and d4 < -eps) or (d3 < -eps and d4 > eps)):
        return True

    def on(p, q, r):
        return abs(_cross(p, q, r)) < eps and min(p[0], q[0]) - eps <= r[0] <= max(p[0], q[0]) + eps \
            and min(p[1], q[1]) - eps <= r[1] <= max(p[1], q[1]) + eps

    return on(b1, b2, a1) or on(b1, b2, a2) or on(a1, a2, b1) or on(a1, a2, b2)


def crossings(d: Drawing) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    segs = d.segments()
    out = []
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            p1, p2, e = segs[i]
            q1, q2, f = segs[j]
            if e == f:
                continue
            if segments_cross(p1, p2, q1, q2):
                out.append((e, f))
    # a vertex drawn on another edge is also a defect
    for v, pv in d.vertices.items():
        for p1, p2, e in segs:
            if v in e:
                continue
            if _dist_to_segment(pv, p1, p2) < 1e-9:
                out.append(((v, v), e))
    return out


def render_svg(a: Arrangement, size: int = 480, title: str | None = None) -> str:
    d = layout(a)
    pts = list(d.vertices.values()) + [p for pts in d.edges.values() for p in pts]
    if not pts:
        pts = [(0.0, 0.0)]
    xs, ys = [p[0] for p in pts], [p[1] for p in pts]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, 1e-9)
    pad = 24
    scale = (size - 2 * pad) / span

    def tr(p: Point) -> str:
        return f"{pad + (p[0] - x0) * scale:.3f},{pad + (y1 - p[1]) * scale:.3f}"

    width = int(round(2 * pad + (x1 - x0) * scale))
    height = int(round(2 * pad + (y1 - y0) * scale))
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]
    if title:
        out.append(f"<title>{title}</title>")
    out.append('<g fill="none" stroke="#333" stroke-width="1.5">')
    for e in sorted(d.edges):
        out.append(f'<polyline data-edge="{e[0]}-{e[1]}" points="{" ".join(tr(p) for p in d.edges[e])}"/>')
    out.append("</g>")
    out.append('<g fill="#fff" stroke="#000" stroke-width="1">')
    for v in sorted(d.vertices):
        x, y = tr(d.vertices[v]).split(",")
        out.append(f'<circle data-vertex="{v}" cx="{x}" cy="{y}" r="5"/>')
    out.append("</g>")
    out.append('<g font-family="sans-serif" font-size="9" text-anchor="middle">')
    for v in sorted(d.vertices):
        x, y = tr(d.vertices[v]).split(",")
        out.append(f'<text x="{x}" y="{float(y) - 7:.3f}">{v}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
