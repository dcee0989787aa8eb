"""The stable-rank trichotomy.

The rank is 1 exactly for acyclic graphs. Otherwise it is infinite when some
proper hereditary saturated H leaves a purely infinite simple E minus H, and 2
when none does. Under the unital reading any such quotient counts (its vertex
set is finite by construction); the strict reading also requires E minus H to
keep finitely many edges, i.e. no omega-bundle.
"""

import logging
from typing import Optional

from data.models import StableRank, StableRankCertificate, StableRankValue
from graph.constructions import compute_h0
from graph.core import condition_k, is_acyclic, some_cycle
from graph.lattice import is_hereditary_saturated
from graph.models import Graph
from utils.progress import progress

from .base_analyzer import AnalysisResult, BaseAnalyzer
from .decomposition import isolate_cycle
from .purely_infinite import check_quotient, pis_quotients

logger = logging.getLogger(__name__)


def stable_rank(
    graph: Graph,
    strict_finite: bool = False,
    max_lattice: Optional[int] = None,
    workers: int = 1,
) -> StableRank:
    """Stable rank with a certificate; the other reading is evaluated alongside."""
    mode = "strict" if strict_finite else "unital"
    cycle = some_cycle(graph)
    if cycle is None:
        return StableRank(
            value=StableRankValue.ONE,
            mode=mode,
            certificate=StableRankCertificate(kind="acyclic"),
            alternate_value=StableRankValue.ONE,
        )

    checks = pis_quotients(graph, max_lattice=max_lattice, workers=workers, include_rejected=True)
    accepted = [c for c in checks if c.verdict.holds]
    edge_finite = [c for c in accepted if c.edge_finite]
    chosen, other = (edge_finite, accepted) if strict_finite else (accepted, edge_finite)
    edge_infinite = [c.H.vertices for c in accepted if not c.edge_finite]

    if chosen:
        witness = chosen[0]
        value = StableRankValue.INFINITE
        certificate = StableRankCertificate(
            kind="pis_quotient",
            cycle=cycle,
            H=witness.H,
            verdict=witness.verdict,
            examined=len(checks),
            edge_infinite=edge_infinite,
        )
    else:
        value = StableRankValue.TWO
        k = condition_k(graph)
        certificate = StableRankCertificate(
            kind="exhaustion",
            cycle=cycle,
            examined=len(checks),
            edge_infinite=edge_infinite,
            decomposition=compute_h0(graph),
            isolation=None if k.holds else isolate_cycle(graph, k.witness["vertex"]),
        )

    alternate = StableRankValue.INFINITE if other else StableRankValue.TWO
    if alternate is not value:
        logger.info("%s: stable rank %s under the %s reading but %s otherwise", graph.name, value.symbol, mode, alternate.symbol)
    return StableRank(
        value=value,
        mode=mode,
        certificate=certificate,
        alternate_value=alternate,
        divergence=alternate is not value,
    )


def verify_certificate(graph: Graph, rank: StableRank, max_lattice: Optional[int] = None) -> bool:
    """Re-check a stable-rank certificate against the graph from scratch."""
    certificate = rank.certificate
    if rank.value is StableRankValue.ONE:
        return certificate.kind == "acyclic" and is_acyclic(graph)
    if is_acyclic(graph):
        return False

    if rank.value is StableRankValue.INFINITE:
        if certificate.H is None or len(certificate.H.vertices) >= len(graph.vertices):
            return False
        if not is_hereditary_saturated(graph, certificate.H).holds:
            return False
        check = check_quotient(graph, certificate.H)
        return check.verdict.holds and (rank.mode == "unital" or check.edge_finite)

    remaining = pis_quotients(graph, max_lattice=max_lattice)
    if rank.mode == "strict":
        remaining = [c for c in remaining if c.edge_finite]
    if remaining:
        return False
    return certificate.isolation is None or certificate.isolation.exitless


class StableRankAnalyzer(BaseAnalyzer):
    """Decides the stable rank trichotomy"""

    def analyze(self, graph: Graph) -> AnalysisResult:
        progress.update_status(self.name, graph.name, "Searching for a purely infinite simple quotient")
        rank = stable_rank(
            graph,
            strict_finite=self.config.get("strict_finite", False),
            max_lattice=self.config.get("max_lattice"),
            workers=self.config.get("workers", 1),
        )
        summary = f"stable rank {rank.value.symbol} ({rank.mode} reading)"
        if rank.divergence:
            summary += f"; {rank.alternate_value.symbol} under the {rank.alternate_mode} reading"
        return self.result(rank, summary)
