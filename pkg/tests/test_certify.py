from __future__ import annotations

import copy
import json

from spherelink.certify import (
    FORMAT,
    dumps,
    intrinsic_document,
    minimality_document,
    move_document,
    replay,
)
from spherelink.embedding import spherical_arrangements
from spherelink.intrinsic import (
    Settings,
    VertBarInput,
    check_vert_bar,
    is_intrinsically_linked,
    is_minor_minimal,
)


def _minimal_doc(named, name, prop):
    g = named(name)
    return minimality_document(g, prop, is_minor_minimal(g, prop), Settings())


def test_document_layout(named):
    doc = _minimal_doc(named, "K4uK4", "type1")
    assert doc["format"] == FORMAT and doc["verdict"] == "minor-minimal"
    assert set(doc) >= {"graph", "property", "verdict", "witnesses", "refutations", "settings"}
    text = dumps(doc)
    assert json.loads(text) == doc
    assert text == dumps(json.loads(text))


def test_valid_certificates_replay(named):
    for name, prop in [("K4uK4", "type1"), ("K32uK32", "type1"), ("D6", "type2"), ("D9a", "type2")]:
        res = replay(_minimal_doc(named, name, prop))
        assert res.ok, res.problems
        assert res.checked > 0


def test_not_intrinsic_certificate(named):
    g = named("K4uK4-e")
    doc = intrinsic_document(g, is_intrinsically_linked(g, "type1"), Settings())
    assert doc["verdict"] == "not-intrinsic"
    assert replay(doc).ok


def test_tampered_witness_link_detected(named):
    doc = _minimal_doc(named, "D6", "type2")
    bad = copy.deepcopy(doc)
    # move both points of one pair onto the same side: keep the cycle, reuse a point pair twice
    link = bad["witnesses"][0]["link"]
    link["s0"] = [link["s0"][0], link["s0"][0]]
    res = replay(bad)
    assert not res.ok


def test_tampered_refutation_detected(named):
    doc = _minimal_doc(named, "K4uK4", "type1")
    bad = copy.deepcopy(doc)
    # replace a refutation's arrangement with the (linked) arrangement of the full graph
    a = spherical_arrangements(named("K4uK4"))[0]
    bad["refutations"][0]["arrangement"] = a.to_text()
    assert not replay(bad).ok


def test_missing_refutation_detected(named):
    doc = _minimal_doc(named, "K4uK4", "type1")
    bad = copy.deepcopy(doc)
    bad["refutations"].pop()
    res = replay(bad)
    assert not res.ok and any("exactly once" in p for p in res.problems)


def test_duplicate_witness_detected(named):
    doc = _minimal_doc(named, "D6", "type2")
    bad = copy.deepcopy(doc)
    bad["witnesses"][1] = bad["witnesses"][0]
    assert not replay(bad).ok


def test_wrong_graph_detected(named):
    doc = _minimal_doc(named, "K4uK4", "type1")
    bad = copy.deepcopy(doc)
    bad["graph"]["edges"] = bad["graph"]["edges"][1:]
    assert not replay(bad).ok


def test_corrupt_arrangement_text_detected(named):
    doc = _minimal_doc(named, "D6", "type2")
    bad = copy.deepcopy(doc)
    bad["witnesses"][0]["arrangement"] = bad["witnesses"][0]["arrangement"].replace("face 0", "face 9")
    assert not replay(bad).ok


def test_malformed_document():
    assert not replay({"graph": {"n": 1}}).ok


def test_move_document_replays(named):
    g = named("D9a")
    comps = g.components()
    g0, _ = g.induced(next(c for c in comps if len(c) > 1))
    report = check_vert_bar(VertBarInput(g0, 3))
    doc = move_document(report, g, Settings())
    res = replay(doc)
    assert res.ok and res.checked >= 2
