"""Analyzers wrapping the graph-level decisions: vertex classes, Conditions
(L) and (K), isolated cycles and the hereditary saturated lattice."""

from graph.core import classify_vertices, condition_k, condition_l, has_isolated_cycles, is_row_finite
from graph.lattice import admissible_pairs, lattice_summary
from graph.models import Graph
from utils.progress import progress

from .base_analyzer import AnalysisResult, BaseAnalyzer


class VertexClassAnalyzer(BaseAnalyzer):
    """Sinks, finite emitters and infinite emitters"""

    def analyze(self, graph: Graph) -> AnalysisResult:
        classes = list(classify_vertices(graph).values())
        row_finite = is_row_finite(graph)
        counts = {kind: sum(1 for c in classes if c.kind == kind) for kind in ("sink", "finite emitter", "infinite emitter")}
        summary = ", ".join(f"{n} {kind}" + ("s" if n != 1 else "") for kind, n in counts.items())
        return self.result({"vertex_classes": classes, "row_finite": row_finite}, summary, holds=row_finite)


class ConditionLAnalyzer(BaseAnalyzer):
    def analyze(self, graph: Graph) -> AnalysisResult:
        verdict = condition_l(graph)
        return self.result(verdict, verdict.reasoning, holds=verdict.holds)


class ConditionKAnalyzer(BaseAnalyzer):
    def analyze(self, graph: Graph) -> AnalysisResult:
        verdict = condition_k(graph)
        return self.result(verdict, verdict.reasoning, holds=verdict.holds)


class IsolatedCyclesAnalyzer(BaseAnalyzer):
    def analyze(self, graph: Graph) -> AnalysisResult:
        verdict = has_isolated_cycles(graph)
        return self.result(verdict, verdict.reasoning, holds=verdict.holds)


class LatticeAnalyzer(BaseAnalyzer):
    """Enumerates the hereditary saturated sets and counts admissible pairs"""

    def analyze(self, graph: Graph) -> AnalysisResult:
        max_lattice = self.config.get("max_lattice")
        progress.update_status(self.name, graph.name, "Enumerating hereditary saturated sets")
        summary = lattice_summary(graph, max_lattice)
        progress.update_status(self.name, graph.name, "Counting admissible pairs")
        pairs = len(admissible_pairs(graph, max_lattice))
        return self.result(
            {"lattice": summary, "admissible_pairs": pairs},
            f"{summary.size} hereditary saturated sets, {pairs} admissible pairs",
            holds=summary.trivial,
        )
