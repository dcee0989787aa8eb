"""Hereditary saturated closures, the lattice of hereditary saturated sets,
breaking vertices and admissible pairs."""

import logging
from collections import deque
from itertools import combinations
from typing import Iterable, Optional, Union

import networkx as nx

from data.cache import get_cache

from .core import classify_vertices, require_vertices, to_digraph
from .errors import LatticeSizeError, NotHereditarySaturatedError
from .models import AdmissiblePair, Graph, HSSet, LatticeSummary, Verdict, sorted_vertices

logger = logging.getLogger(__name__)

DEFAULT_MAX_LATTICE = 2**20

VertexSetLike = Union[HSSet, Iterable[str]]


def as_vertex_set(vertices: VertexSetLike) -> frozenset[str]:
    if isinstance(vertices, HSSet):
        return vertices.members()
    return frozenset(vertices)


class Closer:
    """Repeated closures over one graph.

    Stage 0 adds everything reachable from the generators; stage n adds the
    finite emitters whose edges all land in stage n-1.
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        self.digraph = to_digraph(graph)
        classes = classify_vertices(graph)
        self.finite_emitters = {
            v: frozenset(b.target for b in graph.out_bundles(v)) for v, c in classes.items() if c.is_finite_emitter
        }

    def stages(self, generators: Iterable[str]) -> dict[str, int]:
        stage_of = {}
        for vertex in generators:
            stage_of[vertex] = 0
            for reached in nx.descendants(self.digraph, vertex):
                stage_of[reached] = 0

        stage = 0
        while True:
            stage += 1
            added = [v for v, targets in self.finite_emitters.items() if v not in stage_of and targets.issubset(stage_of)]
            if not added:
                return stage_of
            for vertex in added:
                stage_of[vertex] = stage

    def close(self, generators: Iterable[str]) -> frozenset[str]:
        return frozenset(self.stages(generators))


def closure(graph: Graph, vertices: VertexSetLike) -> HSSet:
    """Smallest hereditary saturated superset of ``vertices``, with the stage of every member."""
    generators = require_vertices(graph, as_vertex_set(vertices))
    digest = graph.digest()
    stages = get_cache().get_closure(digest, generators)
    if stages is None:
        stages = Closer(graph).stages(generators)
        get_cache().set_closure(digest, generators, stages)
        logger.debug("closure of %s in %s: %d vertices, %d stages", sorted(generators), graph.name, len(stages), max(stages.values(), default=-1) + 1)
    return HSSet(
        vertices=tuple(stages),
        hereditary_checked=True,
        saturated_checked=True,
        stages=dict(sorted(stages.items())),
    )


def is_hereditary_saturated(graph: Graph, vertices: VertexSetLike) -> Verdict:
    """Check both closure properties; infinite emitters never trigger saturation."""
    members = require_vertices(graph, as_vertex_set(vertices))
    for bundle in graph.bundles:
        if bundle.source in members and bundle.target not in members:
            return Verdict(
                holds=False,
                reasoning=f"not hereditary: edge {bundle.id} leaves the set from {bundle.source} to {bundle.target}",
                witness={"rule": "hereditary", "bundle": bundle.id},
            )
    for vertex, vertex_class in classify_vertices(graph).items():
        if vertex in members or not vertex_class.is_finite_emitter:
            continue
        if all(b.target in members for b in graph.out_bundles(vertex)):
            return Verdict(
                holds=False,
                reasoning=f"not saturated: finite emitter {vertex} sends every edge into the set",
                witness={"rule": "saturated", "vertex": vertex},
            )
    return Verdict(holds=True, reasoning="hereditary and saturated")


def require_hereditary_saturated(graph: Graph, vertices: VertexSetLike) -> HSSet:
    """Certify ``vertices`` or raise ``NotHereditarySaturatedError``."""
    verdict = is_hereditary_saturated(graph, vertices)
    if not verdict.holds:
        raise NotHereditarySaturatedError(verdict.reasoning, verdict.witness)
    return HSSet(vertices=tuple(as_vertex_set(vertices)), hereditary_checked=True, saturated_checked=True)


def _lattice_members(graph: Graph, max_lattice: int) -> list[frozenset[str]]:
    digest = graph.digest()
    cached = get_cache().get_lattice(digest)
    if cached is not None:
        if len(cached) > max_lattice:
            raise LatticeSizeError(max_lattice, len(cached))
        return cached

    closer = Closer(graph)
    generators = sorted({closer.close([v]) for v in graph.vertices}, key=lambda s: (len(s), sorted(s)))
    members: set[frozenset[str]] = {frozenset()}
    queue = deque([frozenset()])
    while queue:
        current = queue.popleft()
        for generator in generators:
            if generator <= current:
                continue
            joined = closer.close(current | generator)
            if joined in members:
                continue
            members.add(joined)
            if len(members) > max_lattice:
                raise LatticeSizeError(max_lattice, len(members))
            queue.append(joined)

    ordered = sorted(members, key=lambda s: (len(s), sorted(s)))
    logger.debug("lattice of %s has %d members", graph.name, len(ordered))
    get_cache().set_lattice(digest, ordered)
    return ordered


def enumerate_he(graph: Graph, max_lattice: Optional[int] = None) -> list[HSSet]:
    """All hereditary saturated sets, by size then lexicographically.

    Generated as the join-closure of the singleton closures (plus the empty
    set); ``LatticeSizeError`` once more than ``max_lattice`` sets appear.
    """
    bound = DEFAULT_MAX_LATTICE if max_lattice is None else max_lattice
    return [
        HSSet(vertices=tuple(members), hereditary_checked=True, saturated_checked=True)
        for members in _lattice_members(graph, bound)
    ]


def is_trivial_lattice(graph: Graph) -> Verdict:
    """Whether the only hereditary saturated sets are the empty set and all vertices."""
    if graph.is_empty:
        return Verdict(holds=True, reasoning="empty graph", witness={"degenerate": True})
    closer = Closer(graph)
    everything = graph.vertex_set()
    for vertex in graph.vertices:
        generated = closer.close([vertex])
        if generated != everything:
            return Verdict(
                holds=False,
                reasoning=f"closure of {{{vertex}}} is a proper nonempty hereditary saturated set",
                witness={"vertex": vertex, "closure": sorted(generated), "degenerate": False},
            )
    return Verdict(holds=True, reasoning="every vertex generates the whole graph", witness={"degenerate": False})


def lattice_summary(graph: Graph, max_lattice: Optional[int] = None) -> LatticeSummary:
    members = enumerate_he(graph, max_lattice)
    return LatticeSummary(
        size=len(members),
        trivial=is_trivial_lattice(graph).holds,
        members=[member.vertices for member in members],
    )


def breaking_vertices(graph: Graph, hs_set: VertexSetLike) -> tuple[str, ...]:
    """Infinite emitters outside H sending finitely many, but at least one, edges outside H."""
    members = require_hereditary_saturated(graph, hs_set).members()
    breaking = []
    for vertex, vertex_class in classify_vertices(graph).items():
        if vertex in members or not vertex_class.is_infinite_emitter:
            continue
        leaving = [b for b in graph.out_bundles(vertex) if b.target not in members]
        if any(b.is_omega for b in leaving):
            continue
        if sum(b.multiplicity for b in leaving) > 0:
            breaking.append(vertex)
    return sorted_vertices(breaking)


def admissible_pairs(graph: Graph, max_lattice: Optional[int] = None) -> list[AdmissiblePair]:
    """Every (H, B) with H hereditary saturated and B a subset of B_H."""
    bound = DEFAULT_MAX_LATTICE if max_lattice is None else max_lattice
    pairs = []
    for hs_set in enumerate_he(graph, bound):
        breaking = breaking_vertices(graph, hs_set)
        for size in range(len(breaking) + 1):
            for chosen in combinations(breaking, size):
                pairs.append(AdmissiblePair(H=hs_set, B=chosen))
                if len(pairs) > bound:
                    raise LatticeSizeError(bound, len(pairs))
    return pairs
