"""JSON certificates for verdicts, and their replay.

Replay only checks the recorded evidence: every witness arrangement must
be a valid spherical arrangement of the stated graph, link witnesses must be
non-split, and refuting arrangements must be link-free.  It never reruns the
enumeration, except that a minimality certificate must name one refutation
per isomorphism class of immediate minors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .catalog import graph_from_json, graph_to_json
from .embedding import Arrangement, EmbeddingError
from .graph import MinorStep, apply_minor_step, canonical_form, immediate_minors
from .intrinsic import (
    IntrinsicVerdict,
    MinimalityCertificate,
    MinimalityFailure,
    MoveReport,
    Settings,
)
from .linkage import LinkError, LinkPieces, first_link, is_nonsplit

FORMAT = "spherelink-certificate/1"


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _witness_json(a: Arrangement, lp: LinkPieces) -> dict:
    return {"arrangement": a.to_text(), "link": lp.to_json()}


def intrinsic_document(g, verdict: IntrinsicVerdict, settings: Settings) -> dict:
    doc = {
        "format": FORMAT,
        "graph": graph_to_json(g),
        "property": verdict.property,
        "verdict": "intrinsic" if verdict.holds else "not-intrinsic",
        "arrangement_count": verdict.arrangement_count,
        "witnesses": [_witness_json(a, lp) for a, lp in verdict.witnesses],
        "refutations": [],
        "settings": settings.to_json(),
    }
    if not verdict.holds:
        doc["refutations"] = [{"step": None, "minor": graph_to_json(g),
                               "arrangement": verdict.witness.to_text()}]
    return doc


def minimality_document(g, prop: str, res: MinimalityCertificate | MinimalityFailure,
                        settings: Settings) -> dict:
    if isinstance(res, MinimalityCertificate):
        doc = intrinsic_document(g, res.intrinsic, settings)
        doc["verdict"] = "minor-minimal"
        doc["refutations"] = [
            {"step": step.to_json(), "minor": graph_to_json(h), "arrangement": a.to_text()}
            for step, h, a in res.refutations
        ]
        return doc
    doc = {
        "format": FORMAT,
        "graph": graph_to_json(g),
        "property": prop,
        "verdict": "not-minor-minimal",
        "reason": res.reason,
        "witnesses": [],
        "refutations": [],
        "settings": settings.to_json(),
    }
    if res.verdict is not None and res.verdict.witness is not None:
        doc["refutations"] = [{"step": None, "minor": graph_to_json(g),
                               "arrangement": res.verdict.witness.to_text()}]
    if res.step is not None:
        doc["minor_step"] = res.step.to_json()
    return doc


def move_document(report: MoveReport, g, settings: Settings) -> dict:
    return {
        "format": FORMAT,
        "graph": graph_to_json(g),
        "property": "type2",
        "verdict": "move-hypotheses-pass" if report.all_passed else "move-hypotheses-fail",
        "witnesses": [],
        "refutations": [],
        "move": report.to_json(),
        "settings": settings.to_json(),
    }


@dataclass
class ReplayResult:
    ok: bool
    checked: int = 0
    problems: list[str] = field(default_factory=list)


def _arrangement_of(text: str, g) -> Arrangement:
    a = Arrangement.from_text(text)
    if a.graph.sorted_edges != g.sorted_edges or a.graph.n != g.n:
        raise EmbeddingError("arrangement is not an embedding of the stated graph")
    return a


def replay(doc: dict) -> ReplayResult:
    res = ReplayResult(True)

    def fail(msg: str) -> None:
        res.ok = False
        res.problems.append(msg)

    try:
        g = graph_from_json(doc["graph"])
        prop = doc["property"]
        settings = Settings(**doc.get("settings", {}))
        verdict = doc["verdict"]
    except (KeyError, TypeError, ValueError) as exc:
        return ReplayResult(False, 0, [f"malformed certificate: {exc}"])

    seen_certs = set()
    for i, w in enumerate(doc.get("witnesses", [])):
        try:
            a = _arrangement_of(w["arrangement"], g)
            lp = LinkPieces.from_json(w["link"])
            if lp.shape != prop:
                fail(f"witness {i}: pieces have shape {lp.shape}, expected {prop}")
            elif not is_nonsplit(a, lp):
                fail(f"witness {i}: link is split")
            c = a.certificate(settings.reflection)
            if c in seen_certs:
                fail(f"witness {i}: repeats an earlier arrangement")
            seen_certs.add(c)
        except (EmbeddingError, LinkError, KeyError, ValueError) as exc:
            fail(f"witness {i}: {exc}")
        res.checked += 1
    if verdict in ("intrinsic", "minor-minimal"):
        if "arrangement_count" in doc and len(doc.get("witnesses", [])) != doc["arrangement_count"]:
            fail("number of witnesses differs from the recorded arrangement count")

    steps_seen = []
    for i, r in enumerate(doc.get("refutations", [])):
        try:
            minor = graph_from_json(r["minor"])
            if r["step"] is not None:
                step = MinorStep.from_json(r["step"])
                h = apply_minor_step(g, step)
                if h.sorted_edges != minor.sorted_edges or h.n != minor.n:
                    fail(f"refutation {i}: step {step} does not produce the stated minor")
                steps_seen.append(canonical_form(minor))
            a = _arrangement_of(r["arrangement"], minor)
            if first_link(a, prop, settings.nested_only) is not None:
                fail(f"refutation {i}: arrangement contains a {prop} link")
        except (EmbeddingError, LinkError, KeyError, ValueError) as exc:
            fail(f"refutation {i}: {exc}")
        res.checked += 1

    if verdict == "minor-minimal":
        classes = {canonical_form(h) for _, h in immediate_minors(g)}
        if set(steps_seen) != classes or len(steps_seen) != len(classes):
            fail("refutations do not cover each immediate-minor class exactly once")
    if verdict == "not-intrinsic" and not doc.get("refutations"):
        fail("no link-free arrangement recorded")
    if "move" in doc:
        for h in doc["move"]["hypotheses"]:
            for j, w in enumerate(h.get("witnesses", [])):
                if isinstance(w, str):
                    try:
                        a = Arrangement.from_text(w)
                        if first_link(a, "type2", settings.nested_only) is not None:
                            fail(f"hypothesis {h['label']} witness {j}: arrangement is linked")
                    except EmbeddingError as exc:
                        fail(f"hypothesis {h['label']} witness {j}: {exc}")
                    res.checked += 1
    return res
