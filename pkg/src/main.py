import argparse
import sys
from typing import Any, Callable, Optional

from colorama import Fore
from dotenv import load_dotenv
from pydantic import ValidationError
from tabulate import tabulate

from analyzers import classification_report
from analyzers.decomposition import isolated_cycle_decomposition
from analyzers.purely_infinite import pis_quotients, purely_infinite_simple
from analyzers.stable_rank import stable_rank
from analyzers.trace import graph_trace_exists
from data.cache import get_cache
from data.documents import command_output, dump_json, graph_schema, parse_graph, report_document
from graph.constructions import (
    approx_graph,
    approx_tower,
    compute_h0,
    desingularize,
    ideal_graph,
    quotient,
    restrict,
    tower_selection,
)
from graph.core import classify_vertices, condition_k, condition_l, has_isolated_cycles, is_row_finite, require_vertices
from graph.errors import LeavittRankError, SizeGuardError
from graph.lattice import admissible_pairs, breaking_vertices, closure, lattice_summary, require_hereditary_saturated
from graph.models import AdmissiblePair, ConcreteEdge, Graph, format_multiplicity
from tools.oracles import cross_check
from utils.display import (
    compact,
    paint,
    print_graph,
    print_mapping,
    print_pis_verdict,
    print_report,
    print_stable_rank,
    print_verdict,
    yes_no,
)
from utils.log import LOG_LEVELS, configure_logging
from utils.progress import progress
from utils.settings import EngineSettings, load_settings

# Load environment variables from .env file
load_dotenv()

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_SIZE_GUARD = 2
EXIT_ORACLE = 3


class UsageError(ValueError):
    """Unknown command or flag, or a malformed flag value."""


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def parse_vertex_list(raw: Optional[str], graph: Graph) -> list[str]:
    """``"v1,v2"`` to a list of declared vertices; empty string is the empty set."""
    if raw is None or not raw.strip():
        return []
    items = [item.strip() for item in raw.split(",")]
    if any(not item for item in items):
        raise UsageError(f"malformed vertex list '{raw}'")
    require_vertices(graph, items)
    return items


def parse_edge_list(raw: str) -> list[ConcreteEdge]:
    items = [item.strip() for item in raw.split(",")] if raw.strip() else []
    if any(not item for item in items):
        raise UsageError(f"malformed edge list '{raw}'")
    try:
        return [ConcreteEdge.parse(item) for item in items]
    except ValueError as e:
        raise UsageError(f"malformed edge list '{raw}': {e}") from e


def read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _hs_set(graph: Graph, args: argparse.Namespace):
    return require_hereditary_saturated(graph, parse_vertex_list(args.set, graph))


def _validate(graph, args, settings):
    return {"valid": True, "graph": graph, "digest": graph.digest()}


def _vertices(graph, args, settings):
    return {"row_finite": is_row_finite(graph), "vertex_classes": list(classify_vertices(graph).values())}


def _closure(graph, args, settings):
    return closure(graph, parse_vertex_list(args.set, graph))


def _lattice(graph, args, settings):
    return lattice_summary(graph, settings.max_lattice)


def _breaking(graph, args, settings):
    hs_set = _hs_set(graph, args)
    return {"H": hs_set.vertices, "breaking_vertices": breaking_vertices(graph, hs_set)}


def _pairs(graph, args, settings):
    pairs = admissible_pairs(graph, settings.max_lattice)
    return {"count": len(pairs), "pairs": [{"H": p.H.vertices, "B": p.B} for p in pairs]}


def _restrict(graph, args, settings):
    return restrict(graph, _hs_set(graph, args))


def _quotient(graph, args, settings):
    pair = AdmissiblePair(H=_hs_set(graph, args), B=tuple(parse_vertex_list(args.breaking, graph)))
    return quotient(graph, pair)


def _approx(graph, args, settings):
    g0 = parse_vertex_list(args.set, graph) if args.set is not None else list(graph.vertices)
    g1 = parse_edge_list(args.edges) if args.edges is not None else tower_selection(graph, 1)
    return approx_graph(graph, g0, g1)


def _tower(graph, args, settings):
    return approx_tower(graph, 3 if args.depth is None else args.depth)


def _ideal_graph(graph, args, settings):
    return ideal_graph(graph, _hs_set(graph, args), settings.max_paths)


def _h0(graph, args, settings):
    return compute_h0(graph)


def _desingularize(graph, args, settings):
    return desingularize(graph, 1 if args.depth is None else args.depth)


def _pis_quotients(graph, args, settings):
    return pis_quotients(graph, max_lattice=settings.max_lattice, workers=settings.workers)


def _trace(graph, args, settings):
    trace = graph_trace_exists(graph)
    return {"exists": trace is not None, "trace": trace, "norm": str(trace.norm) if trace else None}


def _stable_rank(graph, args, settings):
    return stable_rank(
        graph, strict_finite=settings.strict_finite, max_lattice=settings.max_lattice, workers=settings.workers
    )


def _isolated(graph, args, settings):
    return {"isolated_cycles": has_isolated_cycles(graph), "decomposition": isolated_cycle_decomposition(graph)}


def _report(graph, args, settings):
    if sys.stderr.isatty():
        progress.start()
    try:
        return classification_report(
            graph, strict_finite=settings.strict_finite, max_lattice=settings.max_lattice, workers=settings.workers
        )
    finally:
        progress.stop()


COMMANDS: dict[str, tuple[Callable[[Graph, argparse.Namespace, EngineSettings], Any], str]] = {
    "validate": (_validate, "check a graph document and print it in canonical form"),
    "vertices": (_vertices, "classify vertices as sinks, finite or infinite emitters"),
    "closure": (_closure, "hereditary saturated closure of --set"),
    "lattice": (_lattice, "all hereditary saturated sets"),
    "bh": (_breaking, "breaking vertices of the hereditary saturated --set"),
    "pairs": (_pairs, "all admissible pairs (H, B)"),
    "restrict": (_restrict, "the graph E minus --set"),
    "quotient": (_quotient, "the quotient graph E/(H, B) for H=--set, B=--breaking"),
    "approx": (_approx, "finite approximating graph for G0=--set and G1=--edges"),
    "tower": (_tower, "increasing chain of approximating graphs, --depth stages"),
    "ideal-graph": (_ideal_graph, "graph of the ideal generated by --set, or why it is infinite"),
    "h0": (_h0, "vertices with two returning edges and their closure"),
    "desing": (_desingularize, "desingularization truncated at --depth"),
    "cond-l": (lambda graph, args, settings: condition_l(graph), "Condition (L) with witness"),
    "cond-k": (lambda graph, args, settings: condition_k(graph), "Condition (K) with witness"),
    "isolated": (_isolated, "isolated closed paths, and the check after removing closure(H0)"),
    "pis": (lambda graph, args, settings: purely_infinite_simple(graph), "purely infinite simplicity"),
    "pis-quotients": (_pis_quotients, "hereditary saturated H with purely infinite simple E minus H"),
    "trace": (_trace, "a nonzero graph trace, if one exists"),
    "stable-rank": (_stable_rank, "stable rank 1, 2 or infinite, with certificate"),
    "report": (_report, "every invariant in one report"),
}


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="lpa-rank",
        description="Classify finitely presented graphs and decide the stable rank of their Leavitt path algebras",
        epilog="commands:\n" + "\n".join(f"  {name:<14} {text}" for name, (_, text) in COMMANDS.items())
        + "\n  schema         print the JSON schema of graph documents",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("command", choices=[*COMMANDS, "schema"], help="what to compute")
    parser.add_argument("input", nargs="?", default="-", help="graph document (JSON); '-' reads standard input")
    parser.add_argument("--format", choices=["json", "text"], default="json", help="output format")
    parser.add_argument("--set", help='comma-separated vertex set, e.g. "v1,v2"')
    parser.add_argument("--breaking", help="comma-separated breaking vertices B for quotient (default: none)")
    parser.add_argument("--edges", help='comma-separated concrete edges "bundle#index" for approx')
    parser.add_argument("--depth", type=int, help="desingularization depth (default 1) or tower stages (default 3)")
    parser.add_argument("--strict-finite", action="store_true", default=None, help="require E minus H to have finitely many edges")
    parser.add_argument("--oracle", action="store_true", default=None, help="cross-check against brute-force oracles")
    parser.add_argument("--max-lattice", type=int, help="refuse lattices with more sets than this")
    parser.add_argument("--max-paths", type=int, help="refuse ideal graphs with more entry paths than this")
    parser.add_argument("--workers", type=int, help="threads for quotient checks")
    parser.add_argument("--log-level", type=str.upper, choices=LOG_LEVELS, help="logging level on stderr")
    parser.add_argument("--indent", type=int, default=2, help="JSON indentation")
    parser.add_argument("--no-color", action="store_true", help="plain text output")
    return parser


def print_text(command: str, result: Any, color: bool) -> None:
    """Text rendering for a command result."""
    if command == "report":
        print_report(result, color)
    elif command == "stable-rank":
        print_stable_rank(result, color)
    elif command in ("cond-l", "cond-k"):
        print_verdict("Condition (L)" if command == "cond-l" else "Condition (K)", result, color)
    elif command == "pis":
        print_pis_verdict(result, color)
    elif command == "isolated":
        print_verdict("Isolated closed paths", result["isolated_cycles"], color)
        decomposition = result["decomposition"]
        print(f"After removing H = {compact(list(decomposition.H.vertices))}: {yes_no(decomposition.check, color)}")
    elif command == "vertices":
        rows = [[c.vertex, c.kind, format_multiplicity(c.out_degree, unicode=True)] for c in result["vertex_classes"]]
        print(tabulate(rows, headers=["Vertex", "Kind", "Out-degree"], tablefmt="grid"))
        print(f"Row-finite: {yes_no(result['row_finite'], color)}")
    elif command == "lattice":
        print(f"{result.size} hereditary saturated sets (trivial: {yes_no(result.trivial, color)})")
        for member in result.members:
            print("  " + compact(list(member)))
    elif command == "pis-quotients":
        if not result:
            print("No purely infinite simple quotient")
        for check in result:
            print(f"H = {compact(list(check.H.vertices))}  edge-finite: {yes_no(check.edge_finite, color)}")
    elif command == "tower":
        for stage in result:
            print_graph(stage.graph, color)
    elif isinstance(result, Graph):
        print_graph(result, color)
    elif hasattr(result, "graph") and isinstance(result.graph, Graph):
        print_graph(result.graph, color)
        print_mapping(command, {k: v for k, v in result.model_dump(mode="json").items() if k != "graph"}, color)
    elif hasattr(result, "model_dump"):
        print_mapping(command, result.model_dump(mode="json"), color)
    else:
        print_mapping(command, {k: (v.model_dump(mode="json") if hasattr(v, "model_dump") else v) for k, v in result.items()}, color)


def run(argv: Optional[list[str]] = None) -> int:
    """Run one command; returns the process exit code."""
    try:
        args = build_parser().parse_args(argv)
        settings = load_settings(
            max_lattice=args.max_lattice,
            max_paths=args.max_paths,
            strict_finite=args.strict_finite,
            workers=args.workers,
            oracle=args.oracle,
            log_level=args.log_level,
        )
    except (UsageError, ValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    configure_logging(settings.log_level)
    get_cache().resize(settings.cache_entries)

    if args.command == "schema":
        print(dump_json(graph_schema(), args.indent))
        return EXIT_OK

    color = args.format == "text" and not args.no_color and sys.stdout.isatty()
    try:
        graph = parse_graph(read_input(args.input))
        handler, _ = COMMANDS[args.command]
        result = handler(graph, args, settings)
    except SizeGuardError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SIZE_GUARD
    except (LeavittRankError, UsageError, OSError, UnicodeDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT

    if args.format == "text":
        print_text(args.command, result, color)
    elif args.command == "report":
        print(dump_json(report_document(graph, result), args.indent))
    else:
        print(dump_json(command_output(args.command, graph, result), args.indent))

    if settings.oracle:
        try:
            mismatches = cross_check(graph, settings.max_lattice)
        except SizeGuardError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_SIZE_GUARD
        if mismatches:
            for mismatch in mismatches:
                print(paint(f"oracle mismatch: {mismatch}", Fore.RED, color), file=sys.stderr)
            return EXIT_ORACLE
    return EXIT_OK


def main():
    """Entry point for the lpa-rank script."""
    # Clear the cache
    get_cache().clear()
    sys.exit(run())


if __name__ == "__main__":
    main()
