"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from dataclasses import replace
from pathlib import Path
from typing import Sequence, TextIO

from .errors import GraphGrammarError
from .formats import export_dot, parse_edge_list, parse_pdb_subset, serialize_edge_list
from .generators import GENERATORS, GeneratorSpec, generate
from .grammar import (
    description_length,
    expand,
    inline_single_use,
    max_hierarchy_depth,
    parse_grammar,
    serialize_grammar,
)
from .graph import Graph, construct_graph, format_key, relabel_by_degree, same_graph
from .induction import InductionConfig, SelectionStrategy, induce, score_edge_types
from .lexicon import build_lexicon


class UsageError(Exception):
    pass


def _pairs(text: str) -> list[tuple[int, int]]:
    out = []
    for item in filter(None, text.split(",")):
        try:
            a, b = item.split(":")
            out.append((int(a), int(b)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected a:b pairs, got {item!r}") from None
    return out


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _add_input_args(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--input", required=required, help="input graph file")
    p.add_argument("--format", choices=["edgelist", "pdb"], default="edgelist")
    p.add_argument("--strip", default="", help="comma-separated labels/elements to drop, e.g. H")
    p.add_argument("--close-loop", type=_pairs, default=[], help="extra bonds as a:b,... node id pairs")
    p.add_argument("--relabel-degree", action="store_true", help="label nodes by degree")


def _add_induction_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--strategy", choices=[s.value for s in SelectionStrategy], default="matching")
    p.add_argument("--min-support", type=int, default=2)
    p.add_argument("--max-iter", type=_positive_int, default=None)
    p.add_argument("--no-inline", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphgram", description="Graph grammar induction by lossless compression.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("induce", help="induce a grammar from a graph")
    _add_input_args(p)
    _add_induction_args(p)
    p.add_argument("--trace", action="store_true", help="print per-iteration score tables")
    p.add_argument("--out", help="grammar output file (default: stdout)")
    p.add_argument("--dot", help="also write the grammar as DOT to this file")

    p = sub.add_parser("verify", help="check that a grammar expands to the input graph")
    _add_input_args(p)
    p.add_argument("--grammar", required=True)

    p = sub.add_parser("expand", help="expand a grammar back into an edge list")
    p.add_argument("--grammar", required=True)
    p.add_argument("--out")

    p = sub.add_parser("stats", help="edge lexicon and first-iteration scores")
    _add_input_args(p)
    p.add_argument("--strategy", choices=[s.value for s in SelectionStrategy], default="matching")

    p = sub.add_parser("dot", help="export a graph or grammar as DOT")
    _add_input_args(p, required=False)
    p.add_argument("--grammar")
    p.add_argument("--out")

    p = sub.add_parser("gen", help="write a synthetic graph as an edge list")
    p.add_argument("kind", choices=sorted(GENERATORS))
    p.add_argument("-p", "--param", action="append", default=[], metavar="KEY=VALUE")
    p.add_argument("--out")
    return parser


def _coerce(value: str):
    low = value.lower()
    if low in ("true", "false"):
        return low == "true"
    for cast in (int, float):
        try:
            return cast(value)
        except ValueError:
            pass
    return value


def load_graph(args: argparse.Namespace) -> Graph:
    text = Path(args.input).read_text()
    strip = [s for s in args.strip.split(",") if s]
    if args.format == "pdb":
        graph = parse_pdb_subset(text, strip_elements=strip, close_loop=args.close_loop)
    else:
        graph = parse_edge_list(text)
        if strip or args.close_loop:
            keep = sorted(n for n in graph.nodes if graph.type_name(n) not in strip)
            kept = set(keep)
            edges = [
                (e.u, e.v, e.label, e.directed)
                for _, e in sorted(graph.edges.items())
                if e.u in kept and e.v in kept
            ]
            edges += [(a, b, None, graph.directed) for a, b in args.close_loop]
            graph = construct_graph([(n, graph.type_name(n)) for n in keep], edges)
    if args.relabel_degree:
        graph = relabel_by_degree(graph)
    return graph


def _emit(text: str, path: str | None, stdout: TextIO) -> None:
    if path:
        Path(path).write_text(text)
    else:
        stdout.write(text)


def _cmd_induce(args, stdout, stderr) -> int:
    graph = load_graph(args)
    config = InductionConfig(
        min_support=args.min_support,
        max_iterations=args.max_iter,
        strategy=SelectionStrategy(args.strategy),
        inline_single_use=not args.no_inline,
    )
    # inline after the fact so trace keys can still be named from the full type table
    result = induce(graph, replace(config, inline_single_use=False))
    grammar = inline_single_use(result.grammar) if config.inline_single_use else result.grammar
    final_dl = description_length(grammar).total
    info = stdout if args.out else stderr
    if args.trace:
        names = result.grammar.types
        for i, rec in enumerate(result.trace, 1):
            info.write(f"iteration {i}: chose {format_key(rec.chosen, names)} x{rec.matching_size}, dl {rec.description_length}\n")
            for key, score in rec.scores:
                info.write(f"  {score:6d}  {format_key(key, names)}\n")
    _emit(serialize_grammar(grammar), args.out, stdout)
    if args.dot:
        Path(args.dot).write_text(export_dot(grammar))
    info.write(
        f"iterations={result.iterations}, productions={len(grammar.productions)}, "
        f"dl {result.source_dl} -> {final_dl}, max_depth={max_hierarchy_depth(grammar)}\n"
    )
    return 0


def _cmd_verify(args, stdout, stderr) -> int:
    graph = load_graph(args)
    grammar = parse_grammar(Path(args.grammar).read_text())
    if same_graph(expand(grammar), graph):
        stdout.write("ok\n")
        return 0
    stdout.write("mismatch\n")
    return 1


def _cmd_expand(args, stdout, stderr) -> int:
    grammar = parse_grammar(Path(args.grammar).read_text())
    _emit(serialize_edge_list(expand(grammar)), args.out, stdout)
    return 0


def _cmd_stats(args, stdout, stderr) -> int:
    graph = load_graph(args)
    lexicon = build_lexicon(graph)
    scores = score_edge_types(graph, lexicon, SelectionStrategy(args.strategy))
    stdout.write(f"nodes={graph.num_nodes} edges={graph.num_edges} types={len(lexicon)}\n")
    stdout.write(f"{'count':>6}  {'score':>6}  type\n")
    for key, score in scores:
        stdout.write(f"{lexicon.count(key):6d}  {score:6d}  {format_key(key, graph.types)}\n")
    return 0


def _cmd_dot(args, stdout, stderr) -> int:
    if bool(args.grammar) == bool(args.input):
        raise UsageError("dot needs exactly one of --input or --grammar")
    obj = parse_grammar(Path(args.grammar).read_text()) if args.grammar else load_graph(args)
    _emit(export_dot(obj), args.out, stdout)
    return 0


def _cmd_gen(args, stdout, stderr) -> int:
    params = {}
    for item in args.param:
        if "=" not in item:
            raise UsageError(f"parameter {item!r} is not KEY=VALUE")
        k, v = item.split("=", 1)
        params[k] = _coerce(v)
    _emit(serialize_edge_list(generate(GeneratorSpec(args.kind, params))), args.out, stdout)
    return 0


COMMANDS = {
    "induce": _cmd_induce,
    "verify": _cmd_verify,
    "expand": _cmd_expand,
    "stats": _cmd_stats,
    "dot": _cmd_dot,
    "gen": _cmd_gen,
}


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, stdout, stderr)
    except (UsageError, GraphGrammarError, OSError, ValueError) as exc:
        stderr.write(f"graphgram {args.command}: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
