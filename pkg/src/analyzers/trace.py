"""Graph traces: non-negative vertex weights that are additive along edges at
finite emitters and dominate every finite sub-sum at infinite emitters."""

import logging
from fractions import Fraction
from typing import Optional

from data.models import GraphTrace
from graph.core import classify_vertices
from graph.models import Graph, HSSet
from tools.feasibility import Constraint, find_feasible_point, residuals

from .base_analyzer import AnalysisResult, BaseAnalyzer

logger = logging.getLogger(__name__)


def trace_constraints(graph: Graph, normalized: bool = True) -> list[Constraint]:
    """Linear constraints on ``g`` over the vertices.

    At a finite emitter, ``g(v) = sum of mult * g(r(e))``. At an infinite
    emitter, every omega-bundle target has weight zero and ``g(v)`` is at least
    the finite part. ``normalized`` adds ``sum g = 1``.
    """
    constraints = []
    for vertex, vertex_class in classify_vertices(graph).items():
        if vertex_class.is_sink:
            continue
        coefficients = {vertex: Fraction(1)}
        for bundle in graph.out_bundles(vertex):
            if bundle.is_omega:
                constraints.append(
                    Constraint(coefficients={bundle.target: Fraction(1)}, label=f"g({bundle.target}) = 0 via {bundle.id}")
                )
                continue
            coefficients[bundle.target] = coefficients.get(bundle.target, Fraction(0)) - bundle.multiplicity
        if vertex_class.is_finite_emitter:
            constraints.append(Constraint(coefficients=coefficients, label=f"additivity at {vertex}"))
        else:
            constraints.append(Constraint(coefficients=coefficients, sense=">=", label=f"domination at {vertex}"))
    if normalized:
        constraints.append(
            Constraint(coefficients={v: Fraction(1) for v in graph.vertices}, rhs=Fraction(1), label="norm 1")
        )
    return constraints


def graph_trace_exists(graph: Graph) -> Optional[GraphTrace]:
    """A nonzero graph trace of norm 1, or None when only the zero trace exists."""
    if graph.is_empty:
        return None
    point = find_feasible_point(list(graph.vertices), trace_constraints(graph))
    if point is None:
        logger.debug("%s admits no nonzero graph trace", graph.name)
        return None
    return GraphTrace(values={v: point[v] for v in graph.vertices})


def verify_trace(graph: Graph, trace: GraphTrace) -> list[str]:
    """Every violated trace condition, exactly; empty for a valid trace."""
    missing = sorted(set(graph.vertices) - set(trace.values))
    if missing:
        return [f"no value for {v}" for v in missing]
    point = {v: Fraction(trace.values[v]) for v in graph.vertices}
    return residuals(point, trace_constraints(graph, normalized=False))


def trace_null_set(graph: Graph, trace: GraphTrace) -> HSSet:
    """The vertices the trace vanishes on; hereditary and saturated for any trace."""
    return HSSet(vertices=tuple(v for v in graph.vertices if trace.values.get(v, 0) == 0))


class TraceAnalyzer(BaseAnalyzer):
    def analyze(self, graph: Graph) -> AnalysisResult:
        trace = graph_trace_exists(graph)
        if trace is None:
            return self.result(None, "no nonzero graph trace", holds=False)
        support = [v for v, value in trace.values.items() if value != 0]
        return self.result(trace, f"graph trace of norm {trace.norm} supported on {support}", holds=True)
