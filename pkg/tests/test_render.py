from __future__ import annotations

import xml.etree.ElementTree as ET

import pytest

from spherelink.embedding import spherical_arrangements
from spherelink.graph import complete, cycle_graph
from spherelink.render import crossings, layout, render_svg, segments_cross


def test_segment_crossing_primitive():
    assert segments_cross((0, 0), (1, 1), (0, 1), (1, 0))
    assert not segments_cross((0, 0), (1, 0), (0, 1), (1, 1))
    assert not segments_cross((0, 0), (1, 0), (1, 0), (2, 1))
    assert segments_cross((0, 0), (2, 0), (1, 0), (3, 0))


def test_triangle_svg():
    svg = render_svg(spherical_arrangements(cycle_graph(3))[0])
    root = ET.fromstring(svg)
    ns = "{http://www.w3.org/2000/svg}"
    assert root.tag == ns + "svg"
    assert len(root.findall(f".//{ns}circle")) == 3
    assert len(root.findall(f".//{ns}polyline")) == 3


def test_k4_has_no_crossings():
    assert crossings(layout(spherical_arrangements(complete(4))[0])) == []


@pytest.mark.parametrize("name", ["K4uK4", "K32uK32", "D2", "D3", "D3p", "D6", "D9a", "D10a", "D10b",
                                  "C3uC3uC3", "K4uP3uK1"])
def test_drawings_are_plane(named, name):
    for a in spherical_arrangements(named(name)):
        d = layout(a)
        assert len(d.vertices) == a.graph.n and len(d.edges) == a.graph.m
        assert crossings(d) == []


def _inside(p, poly):
    x, y = p
    inside = False
    for (x1, y1), (x2, y2) in zip(poly, poly[1:] + poly[:1]):
        if (y1 > y) != (y2 > y) and x < x1 + (y - y1) * (x2 - x1) / (y2 - y1):
            inside = not inside
    return inside


def test_k4k4_drawn_nested(named):
    a = spherical_arrangements(named("K4uK4"))[0]
    d = layout(a)
    # one K4 lies inside a triangular face of the other
    nested = False
    for inner, outer in ((range(4, 8), range(4)), (range(4), range(4, 8))):
        for f in a.faces:
            for w in f:
                if w[0][0] not in outer:
                    continue
                poly = []
                for x, y in w:
                    e = (min(x, y), max(x, y))
                    pts = d.edges[e] if e[0] == x else list(reversed(d.edges[e]))
                    poly += pts[:-1]
                rest = [v for v in outer if v not in {x for x, _ in w}]
                # a bounded face leaves the fourth vertex outside its triangle
                nested |= all(_inside(d.vertices[v], poly) for v in inner) and \
                    not any(_inside(d.vertices[v], poly) for v in rest)
    assert nested


def test_render_is_deterministic(named):
    a = spherical_arrangements(named("D9a"))[2]
    assert render_svg(a) == render_svg(a)
