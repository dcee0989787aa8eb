import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from data.models import PISVerdict, QuotientCheck
from graph.constructions import restrict
from graph.core import condition_l, is_row_finite, some_cycle
from graph.lattice import enumerate_he, is_trivial_lattice
from graph.models import Graph, HSSet, Verdict
from utils.progress import progress

from .base_analyzer import AnalysisResult, BaseAnalyzer

logger = logging.getLogger(__name__)


def purely_infinite_simple(graph: Graph) -> PISVerdict:
    """Trivial lattice, at least one closed path, and Condition (L)."""
    trivial = is_trivial_lattice(graph)
    cycle = some_cycle(graph)
    if cycle is None:
        has_cycle = Verdict(holds=False, reasoning="the graph has no closed path")
    else:
        has_cycle = Verdict(
            holds=True, reasoning=f"closed path {cycle.label} based at {cycle.base}", witness={"cycle": cycle.model_dump()}
        )
    exits = condition_l(graph)
    return PISVerdict(
        holds=trivial.holds and has_cycle.holds and exits.holds,
        trivial_lattice=trivial,
        has_cycle=has_cycle,
        condition_l=exits,
    )


def check_quotient(graph: Graph, hs_set: HSSet) -> QuotientCheck:
    remainder = restrict(graph, hs_set)
    return QuotientCheck(H=hs_set, verdict=purely_infinite_simple(remainder), edge_finite=is_row_finite(remainder))


def pis_quotients(
    graph: Graph,
    max_lattice: Optional[int] = None,
    workers: int = 1,
    include_rejected: bool = False,
) -> list[QuotientCheck]:
    """The proper hereditary saturated H for which E minus H is purely infinite simple.

    Args:
        graph: validated graph
        max_lattice: size guard for the lattice enumeration
        workers: evaluate candidates on a thread pool when greater than one
        include_rejected: also return the failing candidates with their witnesses

    Returns:
        Checks in lattice order (size, then lexicographic).
    """
    candidates = [h for h in enumerate_he(graph, max_lattice) if len(h.vertices) < len(graph.vertices)]
    if workers > 1 and len(candidates) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            checks = list(executor.map(lambda h: check_quotient(graph, h), candidates))
    else:
        checks = [check_quotient(graph, h) for h in candidates]
    logger.debug("%s: %d of %d quotients purely infinite simple", graph.name, sum(c.verdict.holds for c in checks), len(checks))
    return checks if include_rejected else [c for c in checks if c.verdict.holds]


class PureInfinitenessAnalyzer(BaseAnalyzer):
    def analyze(self, graph: Graph) -> AnalysisResult:
        verdict = purely_infinite_simple(graph)
        if verdict.holds:
            summary = "purely infinite simple"
        else:
            summary = "not purely infinite simple: fails " + ", ".join(verdict.failing)
        return self.result(verdict, summary, holds=verdict.holds)


class PISQuotientAnalyzer(BaseAnalyzer):
    """Finds the hereditary saturated sets with a purely infinite simple quotient"""

    def analyze(self, graph: Graph) -> AnalysisResult:
        progress.update_status(self.name, graph.name, "Checking quotients")
        checks = pis_quotients(
            graph,
            max_lattice=self.config.get("max_lattice"),
            workers=self.config.get("workers", 1),
        )
        summary = f"{len(checks)} purely infinite simple quotient" + ("s" if len(checks) != 1 else "")
        return self.result(checks, summary, holds=bool(checks))
