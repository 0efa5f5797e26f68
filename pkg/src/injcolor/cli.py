"""The ``inj`` command-line tool.

Exit codes: 0 success (an invalid colouring is still an answer), 2 usage
error, 3 parse error, 4 precondition violated, 5 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import corpus
from .bounds import (color_bipartite, color_general, color_outerplanar_subcubic,
                     color_path_or_cycle, color_subcubic_bipartite, color_subcubic_mad, color_tree,
                     conjecture_probe)
from .coloring import injective_to_star, star_to_injective, verify_injective
from .errors import (ColoringError, ExtensionFailed, FixtureError, GraphError, NoEdges, ParseError,
                     PartialColoring, PreconditionError, ReductionStalled, UnknownName)
from .graph import Graph, mad_exact
from .io import FORMATS, make_result, parse_coloring, read_graph, write_graph, write_mad, write_result
from .solver import injective_chromatic_index

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_PRECONDITION, EXIT_INTERNAL = 0, 2, 3, 4, 5

METHODS = {
    "general": lambda g, a: color_general(g),
    "bipartite": lambda g, a: color_bipartite(g),
    "subcubic-bipartite": lambda g, a: color_subcubic_bipartite(g),
    "mad73": lambda g, a: color_subcubic_mad(g, "mad73", trust_mad=a.trust_mad),
    "mad83": lambda g, a: color_subcubic_mad(g, "mad83", trust_mad=a.trust_mad),
    "mad3": lambda g, a: color_subcubic_mad(g, "mad3", trust_mad=a.trust_mad),
    "outerplanar": lambda g, a: color_outerplanar_subcubic(g),
    "tree": lambda g, a: color_tree(g),
    "pathcycle": lambda g, a: color_path_or_cycle(g),
}


class UsageError(Exception):
    pass


def load_graph(spec: str, fmt: str | None = None) -> Graph:
    """A file path, or else the name of a corpus graph."""
    path = Path(spec)
    if path.is_file():
        return read_graph(path, fmt)
    try:
        return corpus.get(spec).graph
    except UnknownName:
        raise UsageError(f"{spec}: no such file or corpus graph") from None


def _read_coloring(path: str) -> list:
    try:
        return parse_coloring(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None


def _emit(out, payload: bytes) -> None:
    out.write(payload.decode())


def cmd_solve(args, out) -> int:
    g = load_graph(args.input, args.format)
    res = injective_chromatic_index(g)
    result = make_result(g, "exact", res.index, res.coloring, bool(verify_injective(g, res.coloring)),
                         res.lower_bound_certificate)
    _emit(out, write_result(result, "json" if args.json else "tsv"))
    return EXIT_OK


def cmd_bound(args, out) -> int:
    g = load_graph(args.input, args.format)
    res = METHODS[args.method](g, args)
    valid = bool(verify_injective(g, res.coloring))
    if not valid or res.palette_size > res.bound_claimed:
        raise AssertionError(f"{args.method} broke its own guarantee")
    result = make_result(g, args.method, res.bound_claimed, res.coloring, valid)
    _emit(out, write_result(result, "json" if args.json else "tsv"))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    g = load_graph(args.input, args.format)
    colors = _read_coloring(args.coloring)
    if not all(isinstance(c, int) for c in colors):
        raise ParseError("edge colours must be integers")
    verdict = verify_injective(g, colors)
    result = make_result(g, "verify", len(set(colors)), colors, verdict.valid, witness=verdict.witness)
    _emit(out, write_result(result, "json"))
    return EXIT_OK


def cmd_transform(args, out) -> int:
    g = load_graph(args.input, args.format)
    colors = _read_coloring(args.coloring)
    if args.to == "injective":
        ec = star_to_injective(g, colors)
        result = make_result(g, "star-to-injective", ec.palette_size, ec, True)
        _emit(out, write_result(result, "json"))
        return EXIT_OK
    vc = injective_to_star(g, colors)
    tokens = sorted(set(vc.colors))
    rank = {t: i for i, t in enumerate(tokens, start=1)}
    doc = {
        "graph": {"n": g.n, "m": g.m},
        "method": "injective-to-star",
        "index_or_bound": len(tokens),
        "colors": [rank[t] for t in vc.colors],
        "valid": True,
        "certificates": {"clique": []},
        "signatures": ["".join(map(str, t)) for t in vc.colors],
    }
    out.write(json.dumps(doc) + "\n")
    return EXIT_OK


def cmd_mad(args, out) -> int:
    g = load_graph(args.input, args.format)
    _emit(out, write_mad(mad_exact(g)))
    return EXIT_OK


def check_corpus(out) -> bool:
    ok = True
    for ng in corpus.all_graphs():
        notes = []
        try:
            corpus.check_structure(ng.name)
        except FixtureError as exc:
            notes.append(f"fixture error: {exc}")
        idx = injective_chromatic_index(ng.graph).index
        if ng.expected_index is not None and idx != ng.expected_index:
            notes.append(f"index {idx} != expected {ng.expected_index}")
        if ng.expected_mad is not None and mad_exact(ng.graph) != ng.expected_mad:
            notes.append(f"mad {mad_exact(ng.graph)} != expected {ng.expected_mad}")
        status = "FAIL" if notes else "PASS"
        expected = "recorded" if ng.expected_index is None else f"expected {ng.expected_index}"
        out.write(f"{status} {ng.name}: index {idx} ({expected}) {'; '.join(notes)}".rstrip() + "\n")
        ok = ok and not notes
    return ok


def cmd_corpus(args, out) -> int:
    if args.export:
        target = Path(args.export)
        target.mkdir(parents=True, exist_ok=True)
        for ng in corpus.all_graphs():
            (target / f"{ng.name}.g6").write_text(write_graph(ng.graph, "graph6"))
            (target / f"{ng.name}.edgelist").write_text(write_graph(ng.graph, "edgelist"))
        out.write(f"exported {len(corpus.names())} graphs to {target}\n")
    if args.check:
        return EXIT_OK if check_corpus(out) else EXIT_INTERNAL
    if not args.export:
        for name in corpus.names():
            out.write(name + "\n")
    return EXIT_OK


def cmd_probe(args, out) -> int:
    report = conjecture_probe(args.seed, args.count, args.max_n, family=args.family,
                              sample_max_n=args.sample_max_n)
    out.write(report.summary() + "\n")
    for s in report.above_conjecture:
        out.write(f"above {report.conjecture}: {s}\n")
    return EXIT_OK if report.ok else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="inj", description="Injective edge-colouring toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name: str, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("input", help="graph file, or the name of a corpus graph")
        sp.add_argument("--format", choices=FORMATS, help="input format (default: from the file suffix)")
        return sp

    sp = graph_cmd("solve", "exact injective chromatic index")
    sp.add_argument("--json", action="store_true", help="JSON instead of TSV")
    sp.set_defaults(func=cmd_solve)

    sp = graph_cmd("bound", "colour with a constructive method")
    sp.add_argument("--method", required=True, choices=sorted(METHODS))
    sp.add_argument("--trust-mad", action="store_true", help="skip the exact mad precondition check")
    sp.add_argument("--json", action="store_true", help="JSON instead of TSV")
    sp.set_defaults(func=cmd_bound)

    sp = graph_cmd("verify", "check an edge colouring")
    sp.add_argument("--coloring", required=True)
    sp.set_defaults(func=cmd_verify)

    sp = graph_cmd("transform", "convert between star and injective colourings")
    sp.add_argument("--coloring", required=True)
    sp.add_argument("--to", required=True, choices=("star", "injective"))
    sp.set_defaults(func=cmd_transform)

    sp = graph_cmd("mad", "exact maximum average degree")
    sp.set_defaults(func=cmd_mad)

    sp = sub.add_parser("corpus", help="list, export or check the named graphs")
    sp.add_argument("--export", metavar="DIR")
    sp.add_argument("--check", action="store_true")
    sp.set_defaults(func=cmd_corpus)

    sp = sub.add_parser("probe", help="empirical sweep over subcubic graphs")
    sp.add_argument("family", choices=("subcubic", "subcubic-bipartite"))
    sp.add_argument("--max-n", type=int, default=9, help="enumerate all graphs up to this order (default 9)")
    sp.add_argument("--count", type=int, default=2000, help="random samples (default 2000)")
    sp.add_argument("--seed", type=int, default=0, help="sampling seed (default 0)")
    sp.add_argument("--sample-max-n", type=int, default=14, help="largest sampled order (default 14)")
    sp.set_defaults(func=cmd_probe)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"inj: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, PartialColoring) as exc:
        print(f"inj: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (PreconditionError, ReductionStalled, NoEdges, ColoringError, GraphError) as exc:
        print(f"inj: precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ExtensionFailed, AssertionError) as exc:
        print(f"inj: internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
