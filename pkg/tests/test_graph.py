from __future__ import annotations

import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spherelink.graph import (
    Graph,
    GraphError,
    MinorStep,
    apply_minor_step,
    canonical_form,
    complete,
    complete_multipartite,
    contract_edge,
    cycle_graph,
    delete_edge,
    delete_vertex,
    disjoint_union,
    empty,
    from_graph6,
    generate_graphs,
    has_minor,
    immediate_minors,
    is_isomorphic,
    minor_witness,
    path_graph,
    relabel,
    subdivide,
    to_graph6,
)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


@st.composite
def graphs(draw, max_n=6):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def test_constructors():
    assert complete(4).m == 6
    assert complete_multipartite([3, 2]).m == 6
    assert complete_multipartite([3, 1, 1]).m == 7
    assert cycle_graph(5).m == 5
    assert path_graph(4).m == 3
    assert disjoint_union(complete(4), empty(2)).n == 6


def test_graph_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 1), (1, 0)])


def test_subdivide_numbers_new_vertices_last():
    g = subdivide(complete(3), (0, 1), 2)
    assert g.n == 5
    assert set(g.sorted_edges) == {(0, 2), (1, 2), (0, 3), (3, 4), (1, 4)}


def test_contract_merges_into_smaller_endpoint():
    g = contract_edge(path_graph(4), (1, 2))
    assert g.n == 3 and set(g.sorted_edges) == {(0, 1), (1, 2)}


def test_minor_steps_round_trip():
    g = complete(4)
    for step in [MinorStep("delete-edge", (0, 1)), MinorStep("contract-edge", (2, 3)),
                 MinorStep("delete-vertex", 1)]:
        assert MinorStep.from_json(step.to_json()) == step
        h = apply_minor_step(g, step)
        assert h.n + h.m < g.n + g.m


def test_immediate_minors_of_k4_are_two_classes():
    classes = {canonical_form(h) for _, h in immediate_minors(complete(4))}
    assert classes == {canonical_form(delete_edge(complete(4), (0, 1))),
                       canonical_form(complete(3))} | {canonical_form(delete_vertex(complete(4), 0))}


def test_generate_counts_match_known_sequence():
    # graphs on n unlabelled vertices: 1, 2, 4, 11, 34, 156
    counts = [0] * 7
    for g in generate_graphs(6):
        counts[g.n] += 1
    assert counts[1:] == [1, 2, 4, 11, 34, 156]


def test_generate_respects_edge_bound():
    assert all(g.m <= 3 for g in generate_graphs(5, max_edges=3))


def test_graph6_known_value():
    assert to_graph6(complete(4)) == "C~"
    assert from_graph6("C~").sorted_edges == complete(4).sorted_edges


def test_kuratowski_minors():
    petersen = Graph(10, [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)]
                     + [(5 + i, 5 + (i + 2) % 5) for i in range(5)])
    assert has_minor(petersen, complete(5))
    assert has_minor(petersen, complete_multipartite([3, 3]))
    assert not has_minor(complete_multipartite([3, 3]), complete(5))
    assert has_minor(complete(5), complete(4))
    steps = minor_witness(complete(5), cycle_graph(4))
    h = complete(5)
    for s in steps:
        h = apply_minor_step(h, s)
    assert is_isomorphic(h, cycle_graph(4))


@settings(max_examples=60, deadline=None)
@given(graphs(), st.randoms(use_true_random=False))
def test_canonical_form_is_relabelling_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(relabel(g, perm)) == canonical_form(g)


@settings(max_examples=60, deadline=None)
@given(graphs(), graphs())
def test_isomorphism_agrees_with_networkx(g, h):
    assert is_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_graph6_round_trip(g):
    assert from_graph6(to_graph6(g)).sorted_edges == g.sorted_edges


def _minor_closure(g: Graph) -> set[bytes]:
    seen = {canonical_form(g)}
    stack = [g]
    while stack:
        cur = stack.pop()
        for _, h in immediate_minors(cur):
            k = canonical_form(h)
            if k not in seen:
                seen.add(k)
                stack.append(h)
    return seen


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=5), graphs(max_n=4))
def test_has_minor_agrees_with_closure(g, h):
    assert has_minor(g, h) == (canonical_form(h) in _minor_closure(g))
