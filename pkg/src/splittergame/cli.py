"""Command-line interface.

Subcommands: rank, progressing, witness, verify, gen, serve. Machine output
goes to stdout as JSON under --json; human-readable tables otherwise; logs
go to stderr. Exit status 0 on success, 1 when verification found
violations, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .engine import EngineConfig, EngineLimitError, RankEngine
from .generators import GeneratorError, generate, parse_family_spec
from .graphs import Graph, GraphError, graph_to_edge_list, graph_to_json, parse_edge_list, graph_from_json
from .verify import (
    CHECK_NAMES,
    CorpusSpec,
    corpus_all_labeled,
    corpus_families,
    corpus_gnp,
    corpus_standard,
    run_corpus,
)
from .witness import bound_table, extract_witness

CORPORA = ("all-labeled", "families", "gnp", "standard")


class CliError(Exception):
    """Input or usage problem; exits with status 2."""


def _add_input_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", metavar="PATH", help="input graph file (edge list, or JSON if the name ends in .json)")
    p.add_argument("--gen", metavar="SPEC", help="inline generator spec, e.g. family=path,n=5 or JSON")


def _add_engine_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--no-dominance-pruning", action="store_true", help="disable dominance pruning in the connector loop")
    p.add_argument("--no-sandwich-exit", action="store_true", help="disable the two-value early exit in the splitter loop")
    p.add_argument("--no-component-split", action="store_true", help="disable per-component decomposition")
    p.add_argument("--limit-vertices", type=int, default=64, metavar="N", help="refuse arenas larger than N vertices (default 64)")


def _add_output_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit JSON on stdout")
    p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splittergame",
        description="Exact solver, verifier, and playground for the radius-r splitter game.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rank = sub.add_parser("rank", help="compute the splitter rank and optimal connector moves")
    _add_input_args(p_rank)
    p_rank.add_argument("--radius", type=int, required=True)
    _add_engine_args(p_rank)
    _add_output_args(p_rank)

    p_prog = sub.add_parser("progressing", help="enumerate progressing splitter moves")
    _add_input_args(p_prog)
    p_prog.add_argument("--radius", type=int, required=True)
    p_prog.add_argument("--connector", type=int, help="restrict to one connector move")
    _add_engine_args(p_prog)
    _add_output_args(p_prog)

    p_wit = sub.add_parser("witness", help="extract a rank-preserving witness subgraph")
    _add_input_args(p_wit)
    p_wit.add_argument("--radius", type=int, required=True)
    _add_engine_args(p_wit)
    _add_output_args(p_wit)

    p_ver = sub.add_parser("verify", help="run certification checks over a corpus")
    p_ver.add_argument("--corpus", choices=CORPORA, default="standard")
    p_ver.add_argument("--radius", type=int, action="append", required=True, help="repeatable")
    p_ver.add_argument("--max-n", type=int, default=5, help="labeled-graph cap / family size cap")
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--samples", type=int, default=20, help="random samples per invariant check")
    p_ver.add_argument("--checks", default=",".join(CHECK_NAMES), help="comma-separated check names")
    _add_engine_args(p_ver)
    _add_output_args(p_ver)

    p_gen = sub.add_parser("gen", help="generate a graph from a family spec")
    p_gen.add_argument("--gen", metavar="SPEC", required=True)
    p_gen.add_argument("--seed", type=int, help="override the spec's seed")
    _add_output_args(p_gen)

    p_bounds = sub.add_parser("bounds", help="print the witness/progressing bound table")
    p_bounds.add_argument("--radius", type=int, required=True)
    p_bounds.add_argument("--max-k", type=int, default=8)
    _add_output_args(p_bounds)

    p_serve = sub.add_parser("serve", help="serve the interactive play API")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--limit-vertices", type=int, default=64, metavar="N")

    return parser


def _load_graph(args: argparse.Namespace) -> Graph:
    if bool(args.graph) == bool(args.gen):
        raise CliError("exactly one of --graph and --gen is required")
    if args.graph:
        path = Path(args.graph)
        try:
            text = path.read_text()
        except OSError as exc:
            raise CliError(f"cannot read {path}: {exc}") from None
        try:
            if path.suffix == ".json":
                return graph_from_json(text)
            return parse_edge_list(text)
        except GraphError as exc:
            raise CliError(f"{path}: {exc}") from None
    try:
        spec = parse_family_spec(args.gen)
        if getattr(args, "seed", None) is not None:
            spec = type(spec)(spec.family, spec.params, args.seed)
        return generate(spec)
    except GeneratorError as exc:
        raise CliError(str(exc)) from None


def _engine_config(args: argparse.Namespace) -> EngineConfig:
    return EngineConfig(
        radius=args.radius,
        dominance_pruning=not args.no_dominance_pruning,
        sandwich_exit=not args.no_sandwich_exit,
        component_split=not args.no_component_split,
        vertex_limit=args.limit_vertices,
    )


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _cmd_rank(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    engine = RankEngine(g, _engine_config(args))
    analysis = engine.analyze() if g.n else None
    rank = analysis.rank if analysis else 0
    if args.json:
        payload = {
            "n": g.n,
            "radius": args.radius,
            "rank": rank,
            "optimal_connectors": sorted(analysis.optimal_connectors) if analysis else [],
        }
        _emit(args, json.dumps(payload, separators=(",", ":")))
    else:
        lines = [f"rank: {rank} (radius {args.radius}, {g.n} vertices)"]
        if analysis:
            lines.append(f"optimal connector moves: {sorted(analysis.optimal_connectors)}")
        _emit(args, "\n".join(lines))
    return 0


def _cmd_progressing(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    engine = RankEngine(g, _engine_config(args))
    arena = g.full_arena()
    connectors = [args.connector] if args.connector is not None else list(range(g.n))
    rows = []
    for c in connectors:
        if c not in arena:
            raise CliError(f"connector {c} is not a vertex of the graph")
        moves = engine.progressing_moves(arena, c)
        rows.append({"connector": c, "progressing": list(moves)})
    if args.json:
        _emit(args, json.dumps({"radius": args.radius, "per_connector": rows}, separators=(",", ":")))
    else:
        lines = [f"progressing splitter moves (radius {args.radius}):"]
        for row in rows:
            lines.append(f"  c={row['connector']}: {row['progressing']}")
        _emit(args, "\n".join(lines))
    return 0


def _cmd_witness(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    if g.n == 0:
        raise CliError("witness extraction needs a nonempty graph")
    engine = RankEngine(g, _engine_config(args))
    witness = extract_witness(g.full_arena(), engine)
    if args.json:
        _emit(args, witness.to_json())
    else:
        lines = [
            f"rank: {witness.rank}",
            f"witness vertices ({len(witness.vertices)}): {list(witness.vertices)}",
            f"certificate levels: {len(witness.levels)}",
        ]
        _emit(args, "\n".join(lines))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    radii = tuple(args.radius)
    if any(r < 1 for r in radii):
        raise CliError("radius must be >= 1")
    checks = tuple(name.strip() for name in args.checks.split(",") if name.strip())
    if args.corpus == "all-labeled":
        corpus = corpus_all_labeled(min(args.max_n, 6), radii, seed=args.seed)
    elif args.corpus == "families":
        corpus = corpus_families(args.max_n, radii, seed=args.seed)
    elif args.corpus == "gnp":
        corpus = corpus_gnp(radii, seed=args.seed)
    else:
        corpus = corpus_standard(radii, max_labeled_n=min(args.max_n, 6), seed=args.seed)
    corpus = CorpusSpec(
        name=corpus.name,
        entries=corpus.entries,
        radii=corpus.radii,
        seed=args.seed,
        samples=args.samples,
        descriptor=corpus.descriptor,
    )
    try:
        report = run_corpus(corpus, checks, config=_engine_config_for_verify(args))
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if args.json:
        _emit(args, report.to_json())
    else:
        lines = [
            f"corpus {corpus.name}: {len(corpus.entries)} graphs, radii {list(radii)}",
            f"records: {len(report.results)}, violations: {len(report.violations)}",
            f"pass: {report.passed}",
        ]
        for v in report.violations[:20]:
            lines.append(f"  VIOLATION {v['graph']} r={v['r']} [{v['check']}]: {v['detail']}")
        _emit(args, "\n".join(lines))
    return 0 if report.passed else 1


def _engine_config_for_verify(args: argparse.Namespace) -> EngineConfig:
    return EngineConfig(
        radius=args.radius[0],
        dominance_pruning=not args.no_dominance_pruning,
        sandwich_exit=not args.no_sandwich_exit,
        component_split=not args.no_component_split,
        vertex_limit=args.limit_vertices,
    )


def _cmd_gen(args: argparse.Namespace) -> int:
    try:
        spec = parse_family_spec(args.gen)
        if args.seed is not None:
            spec = type(spec)(spec.family, spec.params, args.seed)
        g = generate(spec)
    except GeneratorError as exc:
        raise CliError(str(exc)) from None
    _emit(args, graph_to_json(g) if args.json else graph_to_edge_list(g))
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    if args.radius < 1 or args.max_k < 1:
        raise CliError("radius and max-k must be >= 1")
    table = bound_table(args.radius, args.max_k)
    if args.json:
        payload = {"radius": args.radius, "rows": [{"k": k, "f": f, "g": g} for k, f, g in table]}
        _emit(args, json.dumps(payload, separators=(",", ":")))
    else:
        lines = [f"{'k':>3} {'witness size f(k)':>24} {'progressing bound g(k)':>28}"]
        for k, f, g in table:
            lines.append(f"{k:>3} {f:>24} {g:>28}")
        _emit(args, "\n".join(lines))
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    from .service import run

    print(f"serving on http://{args.host}:{args.port}", file=sys.stderr)
    run(port=args.port, host=args.host, vertex_limit=args.limit_vertices)
    return 0


_COMMANDS = {
    "rank": _cmd_rank,
    "progressing": _cmd_progressing,
    "witness": _cmd_witness,
    "verify": _cmd_verify,
    "gen": _cmd_gen,
    "bounds": _cmd_bounds,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GraphError, GeneratorError, EngineLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
