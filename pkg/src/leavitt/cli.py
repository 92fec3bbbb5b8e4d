"""Command-line entry point: ``leavitt <verb> ...``.

Exit codes: 0 success, 1 consistency failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import checks, corpus
from .closures import hsat_lattice
from .cycles import gk_profile
from .graph import Graph, GraphError, load_graph
from .lie import is_balloon, is_balloon_monoid
from .linalg import check_char
from .monoid import Element, bounded_equal, bounded_leq, composition_series
from .randgraph import RandomGraphSpec
from .report import classify, has_violation, render_text

EXIT_OK, EXIT_INCONSISTENT, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load(path: str) -> Graph:
    p = Path(path)
    if p.is_file():
        return load_graph(p)
    try:
        return corpus.load_builtin(path)
    except FileNotFoundError:
        raise InputError(f"no such graph file or builtin corpus graph: {path}") from None


def _emit(obj, fmt: str, text: str | None = None) -> None:
    if fmt == "text" and text is not None:
        sys.stdout.write(text)
    else:
        sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _kv_text(obj: dict) -> str:
    return "".join(f"{k:<16}{obj[k]}\n" for k in sorted(obj))


def cmd_classify(args) -> int:
    report = classify(_load(args.graph), args.char)
    _emit(report, args.format, render_text(report))
    return EXIT_INCONSISTENT if has_violation(report) else EXIT_OK


def cmd_gkdim(args) -> int:
    out = gk_profile(_load(args.graph)).to_json()
    _emit(out, args.format, _kv_text(out))
    return EXIT_OK


def cmd_lattice(args) -> int:
    g = _load(args.graph)
    lat = hsat_lattice(g, method=args.method)
    out = lat.to_json()
    text = "".join("{" + ", ".join(h) + "}\n" for h in out["elements"])
    _emit(out, args.format, text)
    return EXIT_OK


def cmd_series(args) -> int:
    g = _load(args.graph)
    out = composition_series(g).to_json()
    text = "".join(f"{t:<16}{{{', '.join(h)}}}\n" for h, t in zip(out["chain"][1:], out["types"]))
    _emit(out, args.format, text)
    return EXIT_OK


def cmd_balloon(args) -> int:
    g = _load(args.graph)
    over = [w for w in args.over.split(",") if w]
    a, b = is_balloon(g, args.vertex, over), is_balloon_monoid(g, args.vertex, over)
    out = {"balloon": a, "balloon_monoid": b, "consistent": a == b}
    _emit(out, args.format, _kv_text(out))
    return EXIT_OK if a == b else EXIT_INCONSISTENT


def cmd_monoid(args) -> int:
    g = _load(args.graph)
    try:
        a, b = Element.parse(args.a), Element.parse(args.b)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    for x in (a, b):
        unknown = {v for v, _ in x.counts} - set(g.vertices)
        if unknown:
            raise InputError(f"unknown vertices {sorted(unknown)}")
    fn = bounded_leq if args.relation == "leq" else bounded_equal
    result = fn(g, a, b, args.depth, graded=not args.ungraded)
    out = {"relation": args.relation, "a": str(a), "b": str(b), "depth": args.depth, "result": result.value}
    _emit(out, args.format, f"{result.value}\n")
    return EXIT_OK


def cmd_corpus(args) -> int:
    summary = corpus.run_corpus(args.dir)
    out = summary.to_json()
    text = f"{out['passed']}/{out['cases']} passed\n" + "".join(
        f"FAIL {name}: {'; '.join(d[:3])}\n" for name, d in sorted(summary.failed.items())
    )
    _emit(out, args.format, text)
    return EXIT_OK if summary.ok else EXIT_INCONSISTENT


def cmd_prop(args) -> int:
    spec = RandomGraphSpec(args.seed, args.max_vertices, args.max_edges, connected=args.connectivity)
    out = checks.property_suite(args.n, spec, args.chars, out_dir=args.out, jobs=args.jobs)
    bad = {k: v for k, v in out["failures"].items() if v}
    text = f"{args.n} graphs, chars {args.chars}: " + ("ok\n" if not bad else f"FAILURES {bad}\n")
    _emit(out, args.format, text)
    return EXIT_OK if out["ok"] else EXIT_INCONSISTENT


def _char(s: str) -> int:
    try:
        return check_char(int(s))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _chars(s: str) -> list[int]:
    return [_char(x) for x in s.split(",") if x]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--char", type=_char, default=0, help="field characteristic: 0 or a prime")

    parser = argparse.ArgumentParser(prog="leavitt", description="Classify finite directed graphs by their Leavitt path algebras.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def graph_verb(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("graph", help="graph file, or the name of a builtin corpus graph")
        sp.set_defaults(fn=fn)
        return sp

    graph_verb("classify", cmd_classify, "full classification report")
    graph_verb("gkdim", cmd_gkdim, "GK-dimension with chain lengths")
    sp = graph_verb("lattice", cmd_lattice, "lattice of hereditary saturated sets")
    sp.add_argument("--method", choices=("auto", "brute", "generated"), default="auto")
    graph_verb("series", cmd_series, "typed composition series")
    sp = graph_verb("balloon", cmd_balloon, "balloon test, both characterizations")
    sp.add_argument("--vertex", required=True)
    sp.add_argument("--over", required=True, help="comma-separated vertices of W")

    sp = sub.add_parser("monoid", parents=[common], help="bounded order/equality in the talented monoid")
    sp.add_argument("relation", choices=("leq", "eq"))
    sp.add_argument("graph")
    sp.add_argument("a", help="element such as 'u@0+2*w@1'")
    sp.add_argument("b")
    sp.add_argument("--depth", type=int, default=10)
    sp.add_argument("--ungraded", action="store_true", help="decide in the graph monoid instead")
    sp.set_defaults(fn=cmd_monoid)

    sp = sub.add_parser("corpus", parents=[common], help="golden corpus")
    csub = sp.add_subparsers(dest="action", required=True)
    run = csub.add_parser("run", parents=[common])
    run.add_argument("dir", nargs="?", default=None, help="defaults to the builtin corpus")
    run.set_defaults(fn=cmd_corpus)

    sp = sub.add_parser("prop", parents=[common], help="random-graph property suite")
    sp.add_argument("--n", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--chars", type=_chars, default=[0, 2, 3])
    sp.add_argument("--max-vertices", type=int, default=8)
    sp.add_argument("--max-edges", type=int, default=16)
    conn = sp.add_mutually_exclusive_group()
    conn.add_argument("--connected", dest="connectivity", action="store_const", const=True)
    conn.add_argument("--any-shape", dest="connectivity", action="store_const", const=False)
    sp.set_defaults(connectivity=None)  # mixed: each seed decides
    sp.add_argument("--out", default=None, help="directory for counterexample graph files")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(fn=cmd_prop)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if getattr(args, "verb", None) == "corpus" and args.dir is None:
        args.dir = str(corpus.builtin_dir())
    try:
        return args.fn(args)
    except (InputError, GraphError, FileNotFoundError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
