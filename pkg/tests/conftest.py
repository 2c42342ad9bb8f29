from __future__ import annotations

import itertools
import sys

import pytest

from spherelink.catalog import builtin, load_catalog
from spherelink.graph import Graph


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


@pytest.fixture(scope="session")
def named(catalog):
    return lambda name: builtin(name, catalog)


def automorphisms(g: Graph) -> list[tuple[int, ...]]:
    edges = set(g.sorted_edges)
    out = []
    for perm in itertools.permutations(range(g.n)):
        if all(g.degree(v) == g.degree(perm[v]) for v in range(g.n)) and \
                all((min(perm[u], perm[v]), max(perm[u], perm[v])) in edges for u, v in edges):
            out.append(perm)
    return out


def orbit_count(g: Graph, arrangements, reflection: bool = True) -> int:
    """Orbits of labelled arrangements under graph automorphisms (and mirroring)."""
    group = automorphisms(g)
    seen = set()
    orbits = 0
    for a in arrangements:
        if a in seen:
            continue
        orbits += 1
        for perm in group:
            b = a.relabel(list(perm))
            seen.add(b)
            if reflection:
                seen.add(b.reflect())
    return orbits


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.LINES):
        terminalreporter.write_line(mod.LINES[k])
