import json
from typing import Any, Optional

from colorama import Fore, Style
from pydantic import BaseModel
from tabulate import tabulate

from data.models import ClassificationReport, PISVerdict, StableRank
from graph.models import Graph, Verdict, format_multiplicity

from .analyzers import ANALYZER_ORDER


def paint(text: str, color: str, enabled: bool = True) -> str:
    return f"{color}{text}{Style.RESET_ALL}" if enabled else text


def yes_no(value: Optional[bool], color: bool = True) -> str:
    if value is None:
        return paint("n/a", Fore.YELLOW, color)
    return paint("yes", Fore.GREEN, color) if value else paint("no", Fore.RED, color)


def compact(value: Any) -> str:
    """One-line rendering of nested values for table cells."""
    if isinstance(value, BaseModel):
        value = value.model_dump(mode="json")
    if isinstance(value, (list, tuple)) and all(isinstance(v, str) for v in value):
        return "{" + ", ".join(value) + "}"
    if isinstance(value, (dict, list, tuple)):
        return json.dumps(value, ensure_ascii=False)
    return str(value)


def print_graph(graph: Graph, color: bool = True) -> None:
    """Print a graph as a bundle table."""
    print(f"\n{paint(graph.name, Fore.CYAN + Style.BRIGHT, color)}: {len(graph.vertices)} vertices, {len(graph.bundles)} bundles")
    print("Vertices: " + compact(list(graph.vertices)))
    if graph.bundles:
        rows = [[b.id, b.source, b.target, format_multiplicity(b.multiplicity, unicode=True)] for b in graph.bundles]
        print(tabulate(rows, headers=["Edge", "Source", "Range", "Mult"], tablefmt="grid"))


def print_verdict(title: str, verdict: Verdict, color: bool = True) -> None:
    print(f"{title}: {yes_no(verdict.holds, color)}")
    if verdict.reasoning:
        print(f"  Reasoning: {verdict.reasoning}")
    for key, value in verdict.witness.items():
        print(f"  {key}: {compact(value)}")


def print_pis_verdict(verdict: PISVerdict, color: bool = True) -> None:
    print(f"Purely infinite simple: {yes_no(verdict.holds, color)}")
    rows = [
        ["Trivial lattice", yes_no(verdict.trivial_lattice.holds, color), verdict.trivial_lattice.reasoning],
        ["Closed path", yes_no(verdict.has_cycle.holds, color), verdict.has_cycle.reasoning],
        ["Condition (L)", yes_no(verdict.condition_l.holds, color), verdict.condition_l.reasoning],
    ]
    print(tabulate(rows, headers=["Condition", "Holds", "Reasoning"], tablefmt="grid"))


def print_stable_rank(rank: StableRank, color: bool = True) -> None:
    value_color = {"1": Fore.GREEN, "2": Fore.YELLOW}.get(rank.value.value, Fore.MAGENTA)
    print(f"Stable rank: {paint(rank.value.symbol, value_color + Style.BRIGHT, color)} ({rank.mode} reading)")
    certificate = rank.certificate
    print(f"Certificate: {certificate.kind}")
    if certificate.kind == "acyclic":
        print("  the graph has no closed path")
    if certificate.cycle is not None:
        print(f"  closed path: {certificate.cycle.label} based at {certificate.cycle.base}")
    if certificate.H is not None:
        print(f"  H = {compact(list(certificate.H.vertices))}; E minus H is purely infinite simple")
    if certificate.kind != "acyclic":
        print(f"  hereditary saturated sets examined: {certificate.examined}")
    if certificate.decomposition is not None:
        print(
            f"  H0 = {compact(list(certificate.decomposition.h0))}, "
            f"closure = {compact(list(certificate.decomposition.H.vertices))}"
        )
    if certificate.isolation is not None:
        isolation = certificate.isolation
        print(f"  exitless cycle {isolation.cycle.label} survives outside X = {compact(list(isolation.X.vertices))}")
    if rank.divergence:
        print(paint(f"  Divergence: {rank.alternate_value.symbol} under the {rank.alternate_mode} reading", Fore.RED, color))


def print_report(report: ClassificationReport, color: bool = True) -> None:
    """Print a classification report in a nicely formatted way."""
    print(f"\nCLASSIFICATION REPORT: {paint(report.graph, Fore.CYAN + Style.BRIGHT, color)}")
    print("=" * 80)
    print(f"{report.vertices} vertices, {report.bundles} bundles, row-finite: {yes_no(report.row_finite, color)}")

    if report.vertex_classes:
        rows = [[c.vertex, c.kind, format_multiplicity(c.out_degree, unicode=True)] for c in report.vertex_classes]
        print(tabulate(rows, headers=["Vertex", "Kind", "Out-degree"], tablefmt="grid"))

    summary = [
        ["Condition (L)", yes_no(report.condition_l.holds if report.condition_l else None, color)],
        ["Condition (K)", yes_no(report.condition_k.holds if report.condition_k else None, color)],
        ["Isolated cycles", yes_no(report.isolated_cycles.holds if report.isolated_cycles else None, color)],
        ["|H_E|", report.lattice.size if report.lattice else "n/a"],
        ["Admissible pairs", report.admissible_pairs if report.admissible_pairs is not None else "n/a"],
        ["Purely infinite simple", yes_no(report.purely_infinite_simple.holds if report.purely_infinite_simple else None, color)],
        ["PIS quotients", compact([list(c.H.vertices) for c in report.pis_quotients])],
        ["Graph trace", compact({v: str(g) for v, g in report.trace.values.items()}) if report.trace else "none"],
    ]
    if report.isolated_cycle_decomposition is not None:
        decomposition = report.isolated_cycle_decomposition
        summary.append(["H0 closure", compact(list(decomposition.H.vertices))])
        summary.append(["Isolated after H0", yes_no(decomposition.check, color)])
    print(tabulate(summary, headers=["Invariant", "Value"], tablefmt="grid"))

    if report.stable_rank is not None:
        print()
        print_stable_rank(report.stable_rank, color)

    for display, key in ANALYZER_ORDER:
        if key in report.errors:
            print(paint(f"{display}: {report.errors[key]}", Fore.RED, color))
    print("=" * 80)


def print_mapping(title: str, payload: dict, color: bool = True) -> None:
    """Fallback: a two-column table of the top-level fields."""
    print(paint(title, Style.BRIGHT, color))
    rows = [[key, compact(value)] for key, value in payload.items()]
    print(tabulate(rows, headers=["Field", "Value"], tablefmt="grid"))
