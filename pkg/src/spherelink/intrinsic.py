"""Intrinsic linking over all spherical embeddings, minimality and the two moves."""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .embedding import (
    Arrangement,
    is_planar,
    raw_arrangements,
    spherical_arrangements,
    with_points,
)
from .graph import (
    Graph,
    MinorStep,
    apply_minor_step,
    attach_pendant,
    canonical_form,
    complete,
    complete_multipartite,
    contract_edge,
    delete_edge,
    disjoint_union,
    empty,
    generate_graphs,
    has_minor,
    immediate_minors,
    to_graph6,
)
from .linkage import SHAPES, LinkPieces, first_link

log = logging.getLogger(__name__)

# fewest vertices a link of each shape can use
MIN_VERTICES = {"2link": 5, "type1": 8, "type2": 7}


class NonPlanarError(ValueError):
    """Intrinsic properties are only defined for planar graphs."""


class MoveError(ValueError):
    pass


@dataclass(frozen=True)
class Settings:
    reflection: bool = True
    nested_only: bool = False

    def to_json(self) -> dict:
        return {"reflection": self.reflection, "nested_only": self.nested_only}


@dataclass
class IntrinsicVerdict:
    property: str
    holds: bool
    witness: Arrangement | None = None
    witnesses: list[tuple[Arrangement, LinkPieces]] = field(default_factory=list)
    arrangement_count: int = 0


@dataclass
class MinimalityCertificate:
    graph: Graph
    property: str
    intrinsic: IntrinsicVerdict
    refutations: list[tuple[MinorStep, Graph, Arrangement]]
    settings: Settings = Settings()


@dataclass
class MinimalityFailure:
    graph: Graph
    property: str
    reason: str
    step: MinorStep | None = None
    verdict: IntrinsicVerdict | None = None

    def __bool__(self) -> bool:
        return False


def _check_property(prop: str) -> None:
    if prop not in SHAPES:
        raise ValueError(f"unknown property {prop!r}; expected one of {', '.join(SHAPES)}")


def link_free_arrangement(g: Graph, prop: str, settings: Settings = Settings()) -> Arrangement | None:
    """Some arrangement of ``g`` without a non-split ``prop`` link, or None.

    Walks the raw enumeration and stops at the first link-free arrangement;
    the raw enumeration meets every equivalence class, so None means
    ``g`` is intrinsically linked.
    """
    _check_property(prop)
    if g.n < MIN_VERTICES[prop]:
        return next(raw_arrangements(g), None)
    for a in raw_arrangements(g):
        if first_link(a, prop, settings.nested_only) is None:
            return a
    return None


def is_intrinsically_linked(g: Graph, prop: str, settings: Settings = Settings()) -> IntrinsicVerdict:
    _check_property(prop)
    if not is_planar(g):
        raise NonPlanarError("intrinsic linking is defined for planar graphs only")
    arrs = spherical_arrangements(g, settings.reflection)
    witnesses = []
    for a in arrs:
        lp = first_link(a, prop, settings.nested_only)
        if lp is None:
            return IntrinsicVerdict(prop, False, witness=a, arrangement_count=len(arrs))
        witnesses.append((a, lp))
    return IntrinsicVerdict(prop, True, witnesses=witnesses, arrangement_count=len(arrs))


def _refute(args: tuple[Graph, str, Settings]) -> Arrangement | None:
    g, prop, settings = args
    return link_free_arrangement(g, prop, settings)


def _pmap(fn: Callable, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def is_minor_minimal(
    g: Graph,
    prop: str,
    settings: Settings = Settings(),
    jobs: int = 1,
    depth: int = 1,
) -> MinimalityCertificate | MinimalityFailure:
    """Intrinsic, with every immediate minor refuted by a link-free arrangement.

    Being intrinsically linked passes to graphs that contain a minor with
    the property, so refuting the immediate minors suffices.  ``depth > 1``
    additionally refutes every minor up to that many steps, for auditing.
    """
    _check_property(prop)
    verdict = is_intrinsically_linked(g, prop, settings)
    if not verdict.holds:
        return MinimalityFailure(g, prop, "graph is not intrinsically linked", verdict=verdict)
    minors = immediate_minors(g)
    found = _pmap(_refute, [(h, prop, settings) for _, h in minors], jobs)
    refutations = []
    for (step, h), a in zip(minors, found):
        if a is None:
            return MinimalityFailure(g, prop, f"proper minor after {step} is intrinsically linked", step=step)
        refutations.append((step, h, a))
    if depth > 1:
        frontier = {canonical_form(h): h for _, h in minors}
        seen = set(frontier)
        for level in range(2, depth + 1):
            nxt = {}
            for h in frontier.values():
                for _, k in immediate_minors(h):
                    key = canonical_form(k)
                    if key not in seen:
                        seen.add(key)
                        nxt[key] = k
            keys = sorted(nxt)
            res = _pmap(_refute, [(nxt[k], prop, settings) for k in keys], jobs)
            for k, a in zip(keys, res):
                if a is None:
                    return MinimalityFailure(g, prop, f"a minor {level} steps down is intrinsically linked")
            frontier = nxt
    return MinimalityCertificate(g, prop, verdict, refutations, settings)


def dehkordi_farr_oracle(g: Graph) -> bool:
    """Planar graph has a non-split 2-link in every embedding, by excluded minors."""
    k4k1 = disjoint_union(complete(4), empty(1))
    k32k1 = disjoint_union(complete_multipartite([3, 2]), empty(1))
    k311 = complete_multipartite([3, 1, 1])
    return has_minor(g, k4k1) or has_minor(g, k32k1) or has_minor(g, k311)


# ---------------------------------------------------------------------------
# moves


@dataclass
class Hypothesis:
    label: str
    passed: bool
    detail: str = ""
    witnesses: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"label": self.label, "passed": self.passed, "detail": self.detail,
                "witnesses": self.witnesses}


@dataclass
class MoveReport:
    move: str
    hypotheses: list[Hypothesis]
    result: Graph

    @property
    def all_passed(self) -> bool:
        return all(h.passed for h in self.hypotheses)

    def to_json(self) -> dict:
        from .graph import to_graph6

        return {"move": self.move, "result": to_graph6(self.result),
                "hypotheses": [h.to_json() for h in self.hypotheses]}


@dataclass(frozen=True)
class VertBarInput:
    g0: Graph
    n: int

    def validate(self) -> None:
        if self.n < 3:
            raise MoveError("the vert-bar move needs at least three isolated vertices")
        if self.g0.n == 0 or not self.g0.is_connected():
            raise MoveError("g0 must be connected")
        if not is_planar(self.g0):
            raise MoveError("g0 must be planar")

    @property
    def graph(self) -> Graph:
        return disjoint_union(self.g0, empty(self.n))


def apply_vert_bar(inp: VertBarInput) -> Graph:
    inp.validate()
    return disjoint_union(inp.g0, complete(2))


def _every_face_linked(h: Graph, count: int, prop: str, settings: Settings) -> tuple[bool, list]:
    """Placing ``count`` new points together in any face of any arrangement links."""
    for ai, a in enumerate(spherical_arrangements(h, settings.reflection)):
        for fi in range(len(a.faces)):
            if first_link(with_points(a, fi, count), prop, settings.nested_only) is None:
                return False, [{"arrangement": a.to_text(), "face": fi}]
    return True, []


def _some_face_free(h: Graph, count: int, prop: str, settings: Settings) -> tuple[bool, list]:
    """Every arrangement of ``h`` has a face taking ``count`` points without a link."""
    chosen = []
    for a in spherical_arrangements(h, settings.reflection):
        for fi in range(len(a.faces)):
            placed = with_points(a, fi, count)
            if first_link(placed, prop, settings.nested_only) is None:
                chosen.append(placed.to_text())
                break
        else:
            return False, [{"arrangement": a.to_text()}]
    return True, chosen


def check_vert_bar(inp: VertBarInput, settings: Settings = Settings(), jobs: int = 1) -> MoveReport:
    inp.validate()
    g0, n = inp.g0, inp.n
    hyps = []
    res = is_minor_minimal(inp.graph, "type2", settings, jobs)
    hyps.append(Hypothesis("i", bool(res), "input graph minor-minimal intrinsically type II"
                           if res else getattr(res, "reason", "")))
    hyps.append(Hypothesis("ii", True, f"g0 connected and planar, n = {n} >= 3"))
    ok, wit = _every_face_linked(g0, 2, "type2", settings)
    hyps.append(Hypothesis("iii", ok, "two points in any face of any embedding of g0 give a type II link",
                           wit))
    for label, op, name in (("iv", delete_edge, "deleted"), ("v", contract_edge, "contracted")):
        bad, good = [], []
        seen = set()
        for e in g0.sorted_edges:
            h = op(g0, e)
            key = canonical_form(h)
            if key in seen:
                continue
            seen.add(key)
            ok, wit = _some_face_free(h, n, "type2", settings)
            if ok:
                good.extend(wit)
            else:
                bad.append({"edge": list(e), **wit[0]})
        hyps.append(Hypothesis(label, not bad, f"every embedding of g0 with an edge {name} has a face "
                               f"holding all {n} points without a type II link", bad or good))
    return MoveReport("vert-bar", hyps, apply_vert_bar(inp))


@dataclass(frozen=True)
class SubDangleInput:
    """``e`` is the original edge; the path runs e[0] - s1 - s2 - e[1]."""

    g: Graph
    e: tuple[int, int]
    s1: int
    s2: int

    def validate(self) -> None:
        g, (x, y), s1, s2 = self.g, self.e, self.s1, self.s2
        if len({x, y, s1, s2}) != 4 or not all(0 <= v < g.n for v in (x, y, s1, s2)):
            raise MoveError("e's endpoints and the subdivision vertices must be four distinct vertices")
        if g.degree(s1) != 2 or g.degree(s2) != 2:
            raise MoveError("subdivision vertices must have degree 2")
        if not (g.has_edge(x, s1) and g.has_edge(s1, s2) and g.has_edge(s2, y)):
            raise MoveError("expected the path e[0] - s1 - s2 - e[1]")


def _after_contraction(inp: SubDangleInput) -> tuple[Graph, Callable[[int], int]]:
    """Contract s2 into its neighbouring endpoint; also return the vertex map."""
    y, s2 = inp.e[1], inp.s2
    hi, lo = max(y, s2), min(y, s2)
    h = contract_edge(inp.g, (lo, hi))

    def where(v: int) -> int:
        if v == hi:
            return lo
        return v - 1 if v > hi else v

    return h, where


def apply_sub_dangle(inp: SubDangleInput) -> Graph:
    inp.validate()
    h, where = _after_contraction(inp)
    return attach_pendant(h, where(inp.s1))


def check_sub_dangle(inp: SubDangleInput, settings: Settings = Settings(), jobs: int = 1) -> MoveReport:
    inp.validate()
    g = inp.g
    hyps = []
    res = is_minor_minimal(g, "type2", settings, jobs)
    hyps.append(Hypothesis("i", bool(res), "input graph minor-minimal intrinsically type II"
                           if res else getattr(res, "reason", "")))
    ok = g.is_connected() and is_planar(g)
    hyps.append(Hypothesis("ii", ok, "graph connected and planar"))
    hyps.append(Hypothesis("iii", True, f"edge {inp.e} carries subdivisions {inp.s1}, {inp.s2}"))
    h, where = _after_contraction(inp)
    plus = disjoint_union(h, empty(1))
    free = link_free_arrangement(plus, "type2", settings)
    hyps.append(Hypothesis("iv", free is not None,
                           "contracted graph plus an isolated vertex is not intrinsically type II",
                           [free.to_text()] if free is not None else []))
    for end in inp.e:
        v = where(end)
        free = link_free_arrangement(attach_pendant(h, v), "type2", settings)
        hyps.append(Hypothesis(f"v@{end}", free is not None,
                               f"contracted graph with a pendant at endpoint {end} is not intrinsically type II",
                               [free.to_text()] if free is not None else []))
    return MoveReport("sub-dangle", hyps, apply_sub_dangle(inp))


# ---------------------------------------------------------------------------
# bounded search


def _has_room(g: Graph, prop: str) -> bool:
    """Cheap necessary condition: enough vertices around disjoint cycles."""
    from .linkage import cycles

    cs = cycles(g)
    if not cs:
        return False
    if prop == "type1":
        shortest = None
        for i, c in enumerate(cs):
            sc = set(c)
            for d in cs[i + 1:]:
                if not sc & set(d):
                    t = len(c) + len(d)
                    shortest = t if shortest is None else min(shortest, t)
        return shortest is not None and shortest <= g.n - 2
    need = 2 if prop == "2link" else 4
    return min(len(c) for c in cs) <= g.n - need


def _classify(args: tuple[Graph, str, Settings]) -> bool:
    g, prop, settings = args
    if g.n < MIN_VERTICES[prop] or not _has_room(g, prop):
        return False
    return link_free_arrangement(g, prop, settings) is None


def search_minor_minimal(
    prop: str,
    max_vertices: int,
    max_edges: int | None = None,
    input_stream: Iterable[Graph] | None = None,
    settings: Settings = Settings(),
    jobs: int = 1,
    progress: Callable[[dict], None] | None = None,
) -> list[MinimalityCertificate]:
    """Minor-minimal intrinsically linked planar graphs within the bounds.

    Graphs come from ``input_stream`` or are generated up to isomorphism.
    Results are in canonical order whatever ``jobs`` is.
    """
    _check_property(prop)
    if input_stream is None:
        source: Iterator[Graph] = generate_graphs(max_vertices, max_edges, keep=is_planar)
    else:
        source = (g for g in input_stream
                  if g.n <= max_vertices and (max_edges is None or g.m <= max_edges) and is_planar(g))
    graphs = {}
    for g in source:
        graphs.setdefault(canonical_form(g), g)
    keys = sorted(graphs)
    flags = _pmap(_classify, [(graphs[k], prop, settings) for k in keys], jobs)
    if progress:
        progress({"stage": "intrinsic", "scanned": len(keys), "intrinsic": sum(flags)})
    out = []
    for k, flag in zip(keys, flags):
        if not flag:
            continue
        res = is_minor_minimal(graphs[k], prop, settings, jobs)
        if res:
            out.append(res)
            if progress:
                progress({"stage": "minimal", "graph": to_graph6(graphs[k])})
    out.sort(key=lambda c: (c.graph.n, c.graph.m, canonical_form(c.graph)))
    return out
