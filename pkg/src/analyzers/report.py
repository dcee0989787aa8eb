import logging
from typing import Optional

from data.models import ClassificationReport
from graph.models import Graph
from utils.analyzers import ANALYZER_ORDER

from .base_analyzer import AnalysisResult
from .factory import AnalyzerFactory
from .registry import AnalyzerRegistry

logger = logging.getLogger(__name__)


def run_analyzers(
    graph: Graph,
    selected: Optional[list[str]] = None,
    **parameters,
) -> dict[str, AnalysisResult]:
    """Run the registered analyzers in report order; each keeps the ``parameters`` it declares."""
    available = AnalyzerRegistry.list_analyzers()
    unknown = sorted(set(selected or ()) - set(available))
    if unknown:
        raise KeyError(f"unknown analyzers: {', '.join(unknown)}")
    names = [key for _, key in ANALYZER_ORDER if selected is None or key in selected]
    results = {}
    for name in names:
        analyzer = AnalyzerFactory.create_analyzer(name, **parameters)
        results[name] = analyzer.run(graph)
        logger.debug("%s: %s", name, results[name].summary)
    return results


def classification_report(
    graph: Graph,
    strict_finite: bool = False,
    max_lattice: Optional[int] = None,
    workers: int = 1,
) -> ClassificationReport:
    """Every invariant, analyzer by analyzer; failed analyzers are listed under ``errors``."""
    results = run_analyzers(graph, strict_finite=strict_finite, max_lattice=max_lattice, workers=workers)

    def payload(name: str):
        result = results.get(name)
        return result.payload if result is not None and result.status == "ok" else None

    vertex_info = payload("vertex_classes") or {}
    lattice_info = payload("lattice") or {}
    return ClassificationReport(
        graph=graph.name,
        vertices=len(graph.vertices),
        bundles=len(graph.bundles),
        vertex_classes=vertex_info.get("vertex_classes", []),
        row_finite=vertex_info.get("row_finite"),
        condition_l=payload("condition_l"),
        condition_k=payload("condition_k"),
        isolated_cycles=payload("isolated_cycles"),
        lattice=lattice_info.get("lattice"),
        admissible_pairs=lattice_info.get("admissible_pairs"),
        purely_infinite_simple=payload("purely_infinite_simple"),
        pis_quotients=payload("pis_quotients") or [],
        trace=payload("graph_trace"),
        isolated_cycle_decomposition=payload("isolated_cycle_decomposition"),
        stable_rank=payload("stable_rank"),
        errors={name: r.summary for name, r in results.items() if r.status == "error"},
    )
