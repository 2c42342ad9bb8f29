"""Named graphs, the graph text format and the claims manifest."""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .graph import (
    Graph,
    GraphError,
    attach_pendant,
    complete,
    complete_multipartite,
    contract_edge,
    cycle_graph,
    delete_edge,
    disjoint_union,
    empty,
    path_graph,
    subdivide,
)

PROVENANCES = ("paper", "derived", "pending-figure")
CLAIM_KINDS = ("embedding-count", "intrinsic", "minor-minimal", "move-hypotheses")


class CatalogError(KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class DefinitionPending(CatalogError):
    """The entry exists but its edge list is not known yet."""


# ---------------------------------------------------------------------------
# graph text format


def save_graph(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"e {u} {v}" for u, v in g.sorted_edges]
    return "\n".join(lines) + "\n"


def load_graph(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "n" and len(tok) == 2:
            if n is not None:
                raise GraphError(f"line {ln}: vertex count given twice")
            try:
                n = int(tok[1])
            except ValueError:
                raise GraphError(f"line {ln}: bad vertex count {tok[1]!r}") from None
            if n < 0:
                raise GraphError(f"line {ln}: negative vertex count")
        elif tok[0] == "e" and len(tok) == 3:
            if n is None:
                raise GraphError(f"line {ln}: edge before the 'n' line")
            try:
                u, v = int(tok[1]), int(tok[2])
            except ValueError:
                raise GraphError(f"line {ln}: bad edge {line!r}") from None
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"line {ln}: vertex out of range in {line!r}")
            if u == v:
                raise GraphError(f"line {ln}: loop at {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"line {ln}: duplicate edge {u}-{v} (first on line {seen[key]})")
            seen[key] = ln
            edges.append(key)
        else:
            raise GraphError(f"line {ln}: cannot parse {line!r}")
    if n is None:
        raise GraphError("missing 'n <count>' line")
    return Graph(n, edges)


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges]}


def graph_from_json(d: dict) -> Graph:
    return Graph(d["n"], [tuple(e) for e in d["edges"]])


# ---------------------------------------------------------------------------
# catalog


@dataclass
class CatalogEntry:
    name: str
    provenance: str
    recipe: list | None = None
    edges: list | None = None
    n: int | None = None
    expected_embedding_count: dict | None = None
    expected_properties: list = field(default_factory=list)
    aliases: list[str] = field(default_factory=list)
    notes: str = ""
    extra: dict = field(default_factory=dict)

    @property
    def pending(self) -> bool:
        return self.provenance == "pending-figure" and self.recipe is None and self.edges is None


def catalog_dir() -> Path:
    env = os.environ.get("SPHERELINK_CATALOG_DIR")
    if env:
        return Path(env)
    return Path(str(resources.files("spherelink") / "data"))


_KNOWN = {"name", "provenance", "recipe", "edges", "n", "expected_embedding_count",
          "expected_properties", "aliases", "notes"}


def load_catalog(directory: Path | None = None) -> dict[str, CatalogEntry]:
    path = (directory or catalog_dir()) / "catalog.json"
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CatalogError(f"cannot read catalog {path}: {exc}") from None
    out: dict[str, CatalogEntry] = {}
    for d in data["entries"]:
        if d.get("provenance") not in PROVENANCES:
            raise CatalogError(f"entry {d.get('name')!r} has bad provenance {d.get('provenance')!r}")
        e = CatalogEntry(
            name=d["name"],
            provenance=d["provenance"],
            recipe=d.get("recipe"),
            edges=d.get("edges"),
            n=d.get("n"),
            expected_embedding_count=d.get("expected_embedding_count"),
            expected_properties=d.get("expected_properties", []),
            aliases=d.get("aliases", []),
            notes=d.get("notes", ""),
            extra={k: v for k, v in d.items() if k not in _KNOWN},
        )
        for key in [e.name, *e.aliases]:
            out[key] = e
    return out


def _eval(expr, cat: dict[str, CatalogEntry]) -> Graph:
    op, *args = expr
    if op == "complete":
        return complete(args[0])
    if op == "multipartite":
        return complete_multipartite(args[0])
    if op == "empty":
        return empty(args[0])
    if op == "cycle":
        return cycle_graph(args[0])
    if op == "path":
        return path_graph(args[0])
    if op == "union":
        return disjoint_union(*(_eval(a, cat) for a in args))
    if op == "delete_edge":
        return delete_edge(_eval(args[0], cat), tuple(args[1]))
    if op == "contract_edge":
        return contract_edge(_eval(args[0], cat), tuple(args[1]))
    if op == "subdivide":
        return subdivide(_eval(args[0], cat), tuple(args[1]), args[2])
    if op == "pendant":
        return attach_pendant(_eval(args[0], cat), args[1])
    if op == "add_path":
        # join two existing vertices by a path through k new vertices
        g = _eval(args[0], cat)
        a, b, k = args[1], args[2], args[3]
        chain = [a] + list(range(g.n, g.n + k)) + [b]
        return Graph(g.n + k, list(g.edges) + list(zip(chain, chain[1:])))
    if op == "ref":
        return builtin(args[0], cat)
    if op == "vert_bar":
        from .intrinsic import VertBarInput, apply_vert_bar

        return apply_vert_bar(VertBarInput(_eval(args[0], cat), args[1]))
    if op == "sub_dangle":
        from .intrinsic import SubDangleInput, apply_sub_dangle

        return apply_sub_dangle(SubDangleInput(_eval(args[0], cat), tuple(args[1]), args[2], args[3]))
    raise CatalogError(f"unknown recipe operation {op!r}")


def entry_graph(e: CatalogEntry, cat: dict[str, CatalogEntry]) -> Graph:
    if e.pending:
        raise DefinitionPending(f"{e.name}: definition pending ({e.notes or 'figure needed'})")
    g = _eval(e.recipe, cat) if e.recipe is not None else None
    if e.edges is not None:
        stored = Graph(e.n, [tuple(x) for x in e.edges])
        if g is not None and g.sorted_edges != stored.sorted_edges:
            raise CatalogError(f"{e.name}: recipe does not reproduce the stored edge list")
        g = stored
    return g


def _token_graph(tok: str, cat: dict[str, CatalogEntry]) -> Graph:
    m = re.fullmatch(r"(\d+)(.+)", tok)
    if m and not tok.isdigit():
        count, rest = int(m.group(1)), m.group(2)
        return disjoint_union(*([_token_graph(rest, cat)] * count)) if count else empty(0)
    if tok in cat:
        return entry_graph(cat[tok], cat)
    m = re.fullmatch(r"K(\d+)", tok)
    if m:
        digits = m.group(1)
        if len(digits) == 1:
            return complete(int(digits))
        return complete_multipartite([int(c) for c in digits])
    m = re.fullmatch(r"([CP])(\d+)", tok)
    if m:
        k = int(m.group(2))
        return cycle_graph(k) if m.group(1) == "C" else path_graph(k)
    raise CatalogError(f"unknown graph name {tok!r}")


def builtin(name: str, cat: dict[str, CatalogEntry] | None = None) -> Graph:
    """Graph for a catalog name or a name built from the small grammar.

    Tokens joined by ``u`` form a disjoint union: ``Kn`` (complete),
    ``Kabc`` (complete multipartite with parts a, b, c), ``Cn``, ``Pn``,
    ``kX`` (k copies of X) and catalog names.  A trailing ``-e`` deletes the
    first edge and ``/e`` contracts it.
    """
    cat = cat if cat is not None else load_catalog()
    if name in cat:
        return entry_graph(cat[name], cat)
    for suffix, op in (("-e", delete_edge), ("/e", contract_edge)):
        if name.endswith(suffix):
            g = builtin(name[: -len(suffix)], cat)
            if g.m == 0:
                raise CatalogError(f"{name}: no edge to remove")
            return op(g, g.sorted_edges[0])
    parts = name.split("u")
    if not all(parts):
        raise CatalogError(f"unknown graph name {name!r}")
    return disjoint_union(*(_token_graph(t, cat) for t in parts))


# ---------------------------------------------------------------------------
# claims


@dataclass
class Claim:
    name: str
    kind: str
    expected: object
    anchor: str
    property: str | None = None


@dataclass
class ClaimResult:
    claim: Claim
    status: str  # pass | fail | skipped
    computed: object = None
    detail: str = ""

    def to_json(self) -> dict:
        c = self.claim
        return {"name": c.name, "kind": c.kind, "property": c.property, "expected": c.expected,
                "computed": self.computed, "status": self.status, "detail": self.detail,
                "anchor": c.anchor}


def load_claims(directory: Path | None = None, cat: dict[str, CatalogEntry] | None = None) -> list[Claim]:
    path = (directory or catalog_dir()) / "claims.json"
    data = json.loads(path.read_text())
    cat = cat if cat is not None else load_catalog(directory)
    out = []
    for d in data["claims"]:
        c = Claim(d["name"], d["kind"], d["expected"], d["anchor"], d.get("property"))
        if c.kind not in CLAIM_KINDS:
            raise CatalogError(f"claim on {c.name}: unknown kind {c.kind!r}")
        if not c.anchor:
            raise CatalogError(f"claim on {c.name}: empty anchor")
        base = c.name.removesuffix("-e").removesuffix("/e")
        if base not in cat:
            raise CatalogError(f"claim names unknown entry {c.name!r}")
        out.append(c)
    return out


def _check_claim(args) -> ClaimResult:
    from .embedding import spherical_arrangements
    from .intrinsic import (
        SubDangleInput,
        VertBarInput,
        check_sub_dangle,
        check_vert_bar,
        is_intrinsically_linked,
        is_minor_minimal,
    )

    claim, settings, directory = args
    cat = load_catalog(directory)
    try:
        g = builtin(claim.name, cat)
    except DefinitionPending as exc:
        return ClaimResult(claim, "skipped", detail=str(exc))
    if claim.kind == "embedding-count":
        value = len(spherical_arrangements(g, settings.reflection))
        other = len(spherical_arrangements(g, not settings.reflection))
        detail = f"{'without' if settings.reflection else 'with'} reflection: {other}"
    elif claim.kind == "intrinsic":
        value = is_intrinsically_linked(g, claim.property, settings).holds
        detail = ""
    elif claim.kind == "minor-minimal":
        res = is_minor_minimal(g, claim.property, settings)
        value = bool(res)
        detail = "" if res else res.reason
    else:
        entry = cat[claim.name]
        if "vert_bar" in entry.extra:
            comps = g.components()
            big = [c for c in comps if len(c) > 1]
            g0, _ = g.induced(big[0])
            report = check_vert_bar(VertBarInput(g0, len(comps) - 1), settings)
        else:
            sd = entry.extra["sub_dangle"]
            report = check_sub_dangle(SubDangleInput(g, tuple(sd["edge"]), sd["s1"], sd["s2"]), settings)
        value = report.all_passed
        detail = ", ".join(f"{h.label}:{'pass' if h.passed else 'fail'}" for h in report.hypotheses)
    return ClaimResult(claim, "pass" if value == claim.expected else "fail", value, detail)


def verify_claims(claims: list[Claim], settings=None, jobs: int = 1,
                  directory: Path | None = None) -> list[ClaimResult]:
    from .intrinsic import Settings, _pmap

    settings = settings or Settings()
    return _pmap(_check_claim, [(c, settings, directory) for c in claims], jobs)
