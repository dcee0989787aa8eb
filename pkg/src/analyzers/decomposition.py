import logging
from typing import Optional

from data.models import CycleIsolation, IdealLift, IsolatedCycleDecomposition
from graph.constructions import compute_h0, ideal_graph, quotient, restrict
from graph.core import has_isolated_cycles, out_degree, reaches, unique_return_path
from graph.lattice import closure, require_hereditary_saturated
from graph.models import AdmissiblePair, Graph

from .base_analyzer import AnalysisResult, BaseAnalyzer
from .purely_infinite import purely_infinite_simple

logger = logging.getLogger(__name__)


def isolated_cycle_decomposition(graph: Graph) -> IsolatedCycleDecomposition:
    """H = closure(H0) and whether E/(H, {}) has isolated closed paths."""
    decomposition = compute_h0(graph)
    quotient_graph = quotient(graph, AdmissiblePair(H=decomposition.H)).graph
    verdict = has_isolated_cycles(quotient_graph)
    return IsolatedCycleDecomposition(
        h0=decomposition.h0,
        H=decomposition.H,
        check=verdict.holds,
        reasoning=f"E/(H, {{}}): {verdict.reasoning}",
    )


def isolate_cycle(graph: Graph, vertex: str) -> Optional[CycleIsolation]:
    """Cut away the closure X of the exits of the unique return path at ``vertex``.

    The return path then survives in E minus X without an exit. None when
    ``vertex`` is not the base of exactly one return path.
    """
    cycle = unique_return_path(graph, vertex)
    if cycle is None:
        return None
    on_cycle = set(cycle.vertices)
    used = {edge.bundle_id for edge in cycle.edges}
    exit_ranges = {b.target for v in on_cycle for b in graph.out_bundles(v) if b.id not in used}
    X = closure(graph, exit_ranges)
    remainder = restrict(graph, X)
    exitless = on_cycle.isdisjoint(X.members()) and all(out_degree(remainder, v) == 1 for v in on_cycle)
    return CycleIsolation(vertex=vertex, cycle=cycle, X=X, exitless=exitless)


def ideal_lift(graph: Graph) -> IdealLift:
    """Try to reach a unital purely infinite simple quotient through H = closure(H0).

    When the ideal graph of H is finite and purely infinite simple, the
    vertices that cannot reach H form a hereditary saturated Y and E minus Y
    is checked for pure infiniteness.
    """
    H = compute_h0(graph).H
    if not H.vertices:
        return IdealLift(H=H, reasoning="no vertex carries two returning edges")

    certificate = ideal_graph(graph, H)
    if not certificate.finite:
        return IdealLift(H=H, ideal_graph=certificate, reasoning=f"ideal graph is infinite: {certificate.witness.get('reason', '')}")
    ideal_pis = purely_infinite_simple(certificate.graph).holds
    if not ideal_pis:
        return IdealLift(
            H=H, ideal_graph=certificate, ideal_graph_pis=False, reasoning="ideal graph is not purely infinite simple"
        )

    X = tuple(v for v in graph.vertices if reaches(graph, v, H.vertices))
    Y = require_hereditary_saturated(graph, [v for v in graph.vertices if v not in X])
    quotient_pis = purely_infinite_simple(restrict(graph, Y)).holds
    logger.debug("ideal lift on %s: X=%s, quotient purely infinite simple: %s", graph.name, X, quotient_pis)
    return IdealLift(
        H=H,
        ideal_graph=certificate,
        ideal_graph_pis=True,
        X=X,
        Y=Y,
        quotient_pis=quotient_pis,
        lifted=quotient_pis,
        reasoning="E minus Y is purely infinite simple" if quotient_pis else "E minus Y is not purely infinite simple",
    )


class H0Analyzer(BaseAnalyzer):
    def analyze(self, graph: Graph) -> AnalysisResult:
        decomposition = isolated_cycle_decomposition(graph)
        return self.result(
            decomposition, f"H0={list(decomposition.h0)}, H={list(decomposition.H.vertices)}", holds=decomposition.check
        )
