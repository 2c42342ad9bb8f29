"""Command-line front end.

Exit codes: 0 success or property holds, 1 property fails or a claim does
not match, 2 usage error, 3 invalid input data.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .catalog import (
    CatalogError,
    DefinitionPending,
    builtin,
    load_catalog,
    load_claims,
    load_graph,
    verify_claims,
)
from .certify import dumps, intrinsic_document, minimality_document, move_document, replay
from .embedding import EmbeddingError, spherical_arrangements
from .graph import GraphError, Graph, from_graph6, minor_witness, immediate_minors, to_graph6
from .intrinsic import (
    MoveError,
    NonPlanarError,
    Settings,
    SubDangleInput,
    VertBarInput,
    check_sub_dangle,
    check_vert_bar,
    is_intrinsically_linked,
    is_minor_minimal,
    search_minor_minimal,
)
from .linkage import LinkError
from .render import render_svg

OK, FAILS, USAGE, BAD_INPUT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _add_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("name", nargs="?", help="catalog name or name grammar, e.g. K4uK4")
    p.add_argument("--file", type=Path, help="graph file ('n <count>' and 'e u v' lines)")
    p.add_argument("--stdin", action="store_true", help="read the graph file from standard input")


def _add_settings(p: argparse.ArgumentParser, link: bool = True) -> None:
    if link:
        p.add_argument("--link", choices=["2link", "type1", "type2"], default="type2")
    p.add_argument("--no-reflection", action="store_true",
                   help="count mirror images as different embeddings")
    p.add_argument("--nested-only", action="store_true",
                   help="accept only nested type I links")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--certificate", type=Path, help="write a JSON certificate here")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="spherelink", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"spherelink {__version__}")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("embeddings", help="enumerate spherical embeddings up to equivalence")
    _add_source(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--count", action="store_true")
    g.add_argument("--list", action="store_true")
    p.add_argument("--no-reflection", action="store_true")

    p = sub.add_parser("check", help="is every embedding linked?")
    _add_source(p)
    _add_settings(p)

    p = sub.add_parser("minimal", help="certify minor-minimality")
    _add_source(p)
    _add_settings(p)
    p.add_argument("--depth", type=int, default=1, help="also refute minors this many steps down")

    p = sub.add_parser("minor", help="minor containment, or list immediate minors")
    _add_source(p)
    p.add_argument("minor", nargs="?", help="name of the graph to look for")
    p.add_argument("--minor-file", type=Path)

    p = sub.add_parser("moves", help="check the vert-bar or sub-dangle hypotheses")
    _add_source(p)
    _add_settings(p, link=False)
    p.add_argument("--move", choices=["vert-bar", "sub-dangle"], required=True)
    p.add_argument("--edge", type=int, nargs=2, metavar=("X", "Y"),
                   help="sub-dangle: original edge, path X - S1 - S2 - Y")
    p.add_argument("--subdivisions", type=int, nargs=2, metavar=("S1", "S2"))

    p = sub.add_parser("verify-paper", help="check every claim in the manifest")
    _add_settings(p, link=False)
    p.add_argument("--json", action="store_true", help="print the report as JSON")

    p = sub.add_parser("search", help="find minor-minimal intrinsically linked graphs")
    _add_settings(p)
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--max-edges", type=int)
    p.add_argument("--input", type=Path, help="graph6 stream to scan instead of generating")
    p.add_argument("--checkpoint", type=Path, help="append progress records (JSON lines) here")

    p = sub.add_parser("render", help="draw one embedding as SVG")
    _add_source(p)
    p.add_argument("--index", type=int, default=0, help="which embedding (in listing order)")
    p.add_argument("--out", type=Path)
    p.add_argument("--no-reflection", action="store_true")

    p = sub.add_parser("replay", help="validate a certificate file")
    p.add_argument("path", type=Path)
    return ap


def _graph(args) -> tuple[Graph, str]:
    sources = [args.name is not None, args.file is not None, bool(args.stdin)]
    if sum(sources) != 1:
        raise SystemExit(USAGE)
    if args.file is not None:
        try:
            text = args.file.read_text()
        except OSError as exc:
            raise InputError(str(exc)) from None
        return load_graph(text), str(args.file)
    if args.stdin:
        return load_graph(sys.stdin.read()), "<stdin>"
    return builtin(args.name), args.name


def _settings(args) -> Settings:
    return Settings(reflection=not args.no_reflection, nested_only=getattr(args, "nested_only", False))


def _write_cert(args, doc: dict) -> None:
    if getattr(args, "certificate", None):
        args.certificate.write_text(dumps(doc))


def cmd_embeddings(args) -> int:
    g, label = _graph(args)
    arrs = spherical_arrangements(g, not args.no_reflection)
    if args.list:
        for i, a in enumerate(arrs):
            print(f"# embedding {i}")
            print(a.to_text())
    else:
        print(len(arrs))
    return OK


def cmd_check(args) -> int:
    g, label = _graph(args)
    settings = _settings(args)
    v = is_intrinsically_linked(g, args.link, settings)
    print(f"{label}: {'intrinsically' if v.holds else 'not intrinsically'} {args.link} linked "
          f"({v.arrangement_count} embeddings)")
    if v.holds:
        for i, (a, lp) in enumerate(v.witnesses):
            print(f"embedding {i}: " + "; ".join(lp.to_text().splitlines()))
    else:
        print("link-free embedding:")
        print(v.witness.to_text(), end="")
    _write_cert(args, intrinsic_document(g, v, settings))
    return OK if v.holds else FAILS


def cmd_minimal(args) -> int:
    g, label = _graph(args)
    settings = _settings(args)
    res = is_minor_minimal(g, args.link, settings, jobs=args.jobs, depth=args.depth)
    if res:
        print(f"{label}: minor-minimal intrinsically {args.link} linked "
              f"({len(res.refutations)} immediate-minor classes refuted)")
        for step, h, a in res.refutations:
            print(f"  {step}: link-free embedding found")
    else:
        print(f"{label}: not minor-minimal: {res.reason}")
    _write_cert(args, minimality_document(g, args.link, res, settings))
    return OK if res else FAILS


def cmd_minor(args) -> int:
    g, label = _graph(args)
    if args.minor is None and args.minor_file is None:
        for step, h in immediate_minors(g):
            print(f"{step}\t{to_graph6(h)}")
        return OK
    if args.minor_file is not None:
        h = load_graph(args.minor_file.read_text())
    else:
        h = builtin(args.minor)
    steps = minor_witness(g, h)
    if steps is None:
        print("no")
        return FAILS
    print("yes")
    for s in steps:
        print(f"  {s}")
    return OK


def _split_vert_bar(g: Graph) -> VertBarInput:
    comps = g.components()
    big = [c for c in comps if len(c) > 1]
    if len(big) != 1 or len(comps) - 1 < 1:
        raise MoveError("vert-bar input must be one connected graph plus isolated vertices")
    g0, _ = g.induced(big[0])
    return VertBarInput(g0, len(comps) - 1)


def _find_sub_dangle(g: Graph) -> SubDangleInput:
    for s1 in range(g.n):
        for s2 in sorted(g.adj[s1]):
            if g.degree(s1) != 2 or g.degree(s2) != 2:
                continue
            (x,) = [w for w in g.adj[s1] if w != s2]
            (y,) = [w for w in g.adj[s2] if w != s1]
            if len({x, y, s1, s2}) == 4:
                return SubDangleInput(g, (x, y), s1, s2)
    raise MoveError("no edge with two consecutive subdivision vertices")


def cmd_moves(args) -> int:
    g, label = _graph(args)
    settings = _settings(args)
    if args.move == "vert-bar":
        report = check_vert_bar(_split_vert_bar(g), settings, jobs=args.jobs)
    else:
        if args.edge and args.subdivisions:
            inp = SubDangleInput(g, tuple(args.edge), *args.subdivisions)
        else:
            inp = _find_sub_dangle(g)
        report = check_sub_dangle(inp, settings, jobs=args.jobs)
    for h in report.hypotheses:
        print(f"{h.label:5} {'pass' if h.passed else 'FAIL'}  {h.detail}")
    print(f"result: {to_graph6(report.result)}")
    _write_cert(args, move_document(report, g, settings))
    return OK if report.all_passed else FAILS


def cmd_verify_paper(args) -> int:
    settings = _settings(args)
    results = verify_claims(load_claims(), settings, jobs=args.jobs)
    if args.json:
        print(json.dumps({"settings": settings.to_json(), "claims": [r.to_json() for r in results]},
                         sort_keys=True, indent=2))
    else:
        print(f"settings: reflection={'on' if settings.reflection else 'off'} "
              f"nested-only={'on' if settings.nested_only else 'off'}")
        for r in results:
            c = r.claim
            what = c.kind + (f"[{c.property}]" if c.property else "")
            print(f"{r.status.upper():7} {c.name:10} {what:22} expected={c.expected} "
                  f"computed={r.computed} {r.detail}".rstrip())
        counts = {s: sum(r.status == s for r in results) for s in ("pass", "fail", "skipped")}
        print(f"{counts['pass']} passed, {counts['fail']} failed, {counts['skipped']} skipped")
    if args.certificate:
        args.certificate.write_text(dumps({"settings": settings.to_json(),
                                           "claims": [r.to_json() for r in results]}))
    return FAILS if any(r.status == "fail" for r in results) else OK


def cmd_search(args) -> int:
    settings = _settings(args)
    stream = None
    if args.input is not None:
        try:
            lines = args.input.read_text().split()
        except OSError as exc:
            raise InputError(str(exc)) from None
        stream = [from_graph6(t) for t in lines if not t.startswith(">>")]

    def progress(rec: dict) -> None:
        line = json.dumps(rec, sort_keys=True)
        print(line, file=sys.stderr)
        if args.checkpoint:
            with args.checkpoint.open("a") as fh:
                fh.write(line + "\n")

    found = search_minor_minimal(args.link, args.max_vertices, args.max_edges, stream,
                                 settings, jobs=args.jobs, progress=progress)
    for c in found:
        print(f"{to_graph6(c.graph)}\tn={c.graph.n} m={c.graph.m}")
    if args.certificate:
        args.certificate.write_text(dumps({
            "settings": settings.to_json(), "property": args.link,
            "bounds": {"max_vertices": args.max_vertices, "max_edges": args.max_edges},
            "found": [minimality_document(c.graph, args.link, c, settings) for c in found],
        }))
    return OK


def cmd_render(args) -> int:
    g, label = _graph(args)
    arrs = spherical_arrangements(g, not args.no_reflection)
    if not arrs:
        raise InputError("graph is not planar")
    if not 0 <= args.index < len(arrs):
        raise InputError(f"embedding index out of range (0..{len(arrs) - 1})")
    svg = render_svg(arrs[args.index], title=f"{label} embedding {args.index}")
    if args.out:
        args.out.write_text(svg)
    else:
        sys.stdout.write(svg)
    return OK


def cmd_replay(args) -> int:
    try:
        doc = json.loads(args.path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(str(exc)) from None
    docs = doc["found"] if "found" in doc else [doc]
    ok = True
    for d in docs:
        r = replay(d)
        ok &= r.ok
        print(f"{'ok' if r.ok else 'INVALID'}: {d.get('verdict')} ({r.checked} items checked)")
        for p in r.problems:
            print(f"  {p}")
    return OK if ok else FAILS


COMMANDS = {
    "embeddings": cmd_embeddings,
    "check": cmd_check,
    "minimal": cmd_minimal,
    "minor": cmd_minor,
    "moves": cmd_moves,
    "verify-paper": cmd_verify_paper,
    "search": cmd_search,
    "render": cmd_render,
    "replay": cmd_replay,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code not in (0, None) else OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "jobs", 1) < 1:
        print("spherelink: --jobs must be at least 1", file=sys.stderr)
        return USAGE
    try:
        return COMMANDS[args.command](args)
    except SystemExit as exc:
        if exc.code == USAGE:
            print("spherelink: give exactly one of a graph name, --file or --stdin", file=sys.stderr)
            return USAGE
        raise
    except DefinitionPending as exc:
        print(f"spherelink: {exc}", file=sys.stderr)
        return BAD_INPUT
    except (CatalogError, GraphError, EmbeddingError, LinkError, NonPlanarError, MoveError,
            InputError) as exc:
        print(f"spherelink: {exc}", file=sys.stderr)
        return BAD_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
