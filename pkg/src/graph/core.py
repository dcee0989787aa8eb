"""Graph representation helpers, paths, cycles, reachability, Conditions (L) and (K)."""

import logging
from itertools import product
from typing import Iterable, Optional, Sequence

import networkx as nx

from .errors import GraphValidationError
from .models import (
    Bundle,
    ConcreteEdge,
    Cycle,
    Graph,
    Multiplicity,
    Path,
    ReturnPathClass,
    VertexClass,
    Verdict,
    add_multiplicities,
    is_omega,
)

logger = logging.getLogger(__name__)


def validate_graph(graph: Graph) -> Graph:
    """Check the structural invariants and return the canonically ordered graph."""
    seen_vertices: set[str] = set()
    for vertex in graph.vertices:
        if vertex in seen_vertices:
            raise GraphValidationError("duplicate_identifier", f"vertex '{vertex}' declared twice")
        seen_vertices.add(vertex)

    seen_bundles: set[str] = set()
    for bundle in graph.bundles:
        if bundle.id in seen_bundles:
            raise GraphValidationError("duplicate_identifier", f"edge '{bundle.id}' declared twice")
        seen_bundles.add(bundle.id)
        for endpoint in (bundle.source, bundle.target):
            if endpoint not in seen_vertices:
                raise GraphValidationError(
                    "dangling_endpoint", f"edge '{bundle.id}' uses undeclared vertex '{endpoint}'"
                )
        if is_omega(bundle.multiplicity):
            continue
        if isinstance(bundle.multiplicity, bool) or not isinstance(bundle.multiplicity, int):
            raise GraphValidationError(
                "invalid_multiplicity", f"edge '{bundle.id}' has multiplicity {bundle.multiplicity!r}"
            )
        if bundle.multiplicity == 0:
            raise GraphValidationError("multiplicity_zero", f"edge '{bundle.id}' has multiplicity 0")
        if bundle.multiplicity < 0:
            raise GraphValidationError(
                "invalid_multiplicity", f"edge '{bundle.id}' has negative multiplicity {bundle.multiplicity}"
            )

    validated = Graph(
        name=graph.name,
        vertices=tuple(sorted(graph.vertices)),
        bundles=tuple(sorted(graph.bundles, key=lambda b: b.id)),
    )
    logger.debug("validated graph %s: %d vertices, %d bundles", graph.name, len(validated.vertices), len(validated.bundles))
    return validated


def require_vertex(graph: Graph, vertex: str) -> None:
    if vertex not in graph.vertex_set():
        raise GraphValidationError("unknown_vertex", f"vertex '{vertex}' is not in graph '{graph.name}'")


def require_vertices(graph: Graph, vertices: Iterable[str]) -> frozenset[str]:
    members = frozenset(vertices)
    unknown = sorted(members - graph.vertex_set())
    if unknown:
        raise GraphValidationError("unknown_vertex", f"vertices {unknown} are not in graph '{graph.name}'")
    return members


def out_degree(graph: Graph, vertex: str) -> Multiplicity:
    return add_multiplicities(b.multiplicity for b in graph.bundles if b.source == vertex)


def classify_vertices(graph: Graph) -> dict[str, VertexClass]:
    """Label every vertex as sink, finite emitter or infinite emitter."""
    classes = {}
    for vertex in graph.vertices:
        degree = out_degree(graph, vertex)
        classes[vertex] = VertexClass(
            vertex=vertex,
            is_sink=degree == 0,
            is_finite_emitter=not is_omega(degree) and degree > 0,
            is_infinite_emitter=is_omega(degree),
            out_degree=degree,
        )
    return classes


def is_row_finite(graph: Graph) -> bool:
    return not any(b.is_omega for b in graph.bundles)


def to_digraph(graph: Graph, bundles: Optional[Iterable[Bundle]] = None) -> nx.DiGraph:
    """Vertex adjacency as a networkx digraph; multiplicities are irrelevant here."""
    digraph = nx.DiGraph()
    digraph.add_nodes_from(graph.vertices)
    digraph.add_edges_from((b.source, b.target) for b in (graph.bundles if bundles is None else bundles))
    return digraph


def reachable_from(graph: Graph, sources: Iterable[str]) -> frozenset[str]:
    """All vertices at the end of some path (length zero included) starting in ``sources``."""
    digraph = to_digraph(graph)
    reached = set(sources)
    for vertex in list(reached):
        reached |= nx.descendants(digraph, vertex)
    return frozenset(reached)


def reaches(graph: Graph, vertex: str, targets: Iterable[str]) -> bool:
    """``vertex >= targets``: some path from ``vertex`` ends in ``targets``."""
    require_vertex(graph, vertex)
    target_set = require_vertices(graph, targets)
    return bool(reachable_from(graph, [vertex]) & target_set)


def make_path(graph: Graph, edges: Sequence[ConcreteEdge], source: Optional[str] = None) -> Path:
    """Build a concrete path, checking indices and that consecutive edges meet."""
    if not edges:
        if source is None:
            raise GraphValidationError("unknown_vertex", "a length-zero path needs its vertex")
        require_vertex(graph, source)
        return Path(source=source, range=source)

    previous: Optional[Bundle] = None
    for edge in edges:
        try:
            bundle = graph.bundle(edge.bundle_id)
        except KeyError as exc:
            raise GraphValidationError("unknown_edge", str(exc)) from exc
        if edge.index < 0 or (not bundle.is_omega and edge.index >= bundle.multiplicity):
            raise GraphValidationError("unknown_edge", f"edge index {edge.label} exceeds the bundle multiplicity")
        if previous is not None and previous.target != bundle.source:
            raise GraphValidationError("unknown_edge", f"edges {previous.id} and {bundle.id} do not meet")
        previous = bundle

    first = graph.bundle(edges[0].bundle_id)
    if source is not None and source != first.source:
        raise GraphValidationError("unknown_edge", f"path does not start at '{source}'")
    return Path(source=first.source, range=previous.target, edges=tuple(edges))


def _rotate_to_least(nodes: list[str]) -> list[str]:
    start = nodes.index(min(nodes))
    return nodes[start:] + nodes[:start]


def cycles_through(graph: Graph, nodes: list[str]) -> list[Cycle]:
    """Every simple closed path visiting ``nodes`` in order, one per choice of bundle."""
    hops = []
    for position, node in enumerate(nodes):
        following = nodes[(position + 1) % len(nodes)]
        hops.append([b for b in graph.out_bundles(node) if b.target == following])
    return [
        Cycle(vertices=tuple(nodes), edges=tuple(ConcreteEdge(bundle_id=b.id, index=0) for b in choice))
        for choice in product(*hops)
    ]


def find_cycles(graph: Graph) -> list[Cycle]:
    """All simple closed paths up to rotation, least source vertex first, index 0 per bundle."""
    cycles: list[Cycle] = []
    for nodes in nx.simple_cycles(to_digraph(graph)):
        cycles.extend(cycles_through(graph, _rotate_to_least(list(nodes))))
    cycles.sort(key=lambda c: (c.vertices, tuple(e.bundle_id for e in c.edges)))
    return cycles


def is_acyclic(graph: Graph) -> bool:
    return nx.is_directed_acyclic_graph(to_digraph(graph))


def some_cycle(graph: Graph) -> Optional[Cycle]:
    """One simple closed path, least vertex first, or None when acyclic."""
    try:
        cycle_edges = nx.find_cycle(to_digraph(graph))
    except nx.NetworkXNoCycle:
        return None
    return cycles_through(graph, _rotate_to_least([source for source, _ in cycle_edges]))[0]


def condition_l(graph: Graph) -> Verdict:
    """Every simple closed path has an exit.

    A simple closed path without exit forces total out-degree 1 on each of its
    vertices, and any cycle inside the out-degree-1 part has no exit.
    """
    single = {v for v in graph.vertices if out_degree(graph, v) == 1}
    funnel = [b for b in graph.bundles if b.source in single and b.target in single]
    digraph = nx.DiGraph()
    digraph.add_edges_from((b.source, b.target) for b in funnel)
    try:
        cycle_edges = nx.find_cycle(digraph)
    except nx.NetworkXNoCycle:
        return Verdict(holds=True, reasoning="every simple closed path has an exit")

    nodes = _rotate_to_least([source for source, _ in cycle_edges])
    cycle = cycles_through(graph, nodes)[0]
    return Verdict(
        holds=False,
        reasoning=f"closed path {cycle.label} based at {cycle.base} has no exit",
        witness={"cycle": cycle.model_dump()},
    )


def _return_region(graph: Graph, vertex: str) -> list[Bundle]:
    """Bundles lying on some walk that leaves ``vertex`` and first comes back to it."""
    require_vertex(graph, vertex)
    avoiding = to_digraph(graph)
    avoiding.remove_node(vertex)

    starts = {b.target for b in graph.out_bundles(vertex) if b.target != vertex}
    ends = {b.source for b in graph.in_bundles(vertex) if b.source != vertex}
    forward = set(starts)
    for start in starts:
        forward |= nx.descendants(avoiding, start)
    backward = set(ends)
    for end in ends:
        backward |= nx.ancestors(avoiding, end)
    inside = forward & backward

    return [
        b
        for b in graph.bundles
        if (b.source == vertex or b.source in inside) and (b.target == vertex or b.target in inside)
    ]


def return_path_class(graph: Graph, vertex: str) -> ReturnPathClass:
    """Classify the closed paths at ``vertex`` that meet it only at their endpoints."""
    region = _return_region(graph, vertex)
    if not region:
        return ReturnPathClass.ZERO

    outflow: dict[str, list[Multiplicity]] = {}
    for bundle in region:
        outflow.setdefault(bundle.source, []).append(bundle.multiplicity)
    if all(add_multiplicities(values) == 1 for values in outflow.values()):
        return ReturnPathClass.EXACTLY_ONE
    return ReturnPathClass.AT_LEAST_TWO


def unique_return_path(graph: Graph, vertex: str) -> Optional[Cycle]:
    """The return path at ``vertex`` when it is the only one, else None."""
    if return_path_class(graph, vertex) is not ReturnPathClass.EXACTLY_ONE:
        return None
    step = {b.source: b for b in _return_region(graph, vertex)}
    nodes, edges = [], []
    current = vertex
    while True:
        bundle = step[current]
        nodes.append(current)
        edges.append(ConcreteEdge(bundle_id=bundle.id, index=0))
        current = bundle.target
        if current == vertex:
            return Cycle(vertices=tuple(nodes), edges=tuple(edges))


def condition_k(graph: Graph) -> Verdict:
    """No vertex is the base of exactly one return path."""
    for vertex in graph.vertices:
        path = unique_return_path(graph, vertex)
        if path is not None:
            return Verdict(
                holds=False,
                reasoning=f"{vertex} is the base of exactly one return path ({path.label})",
                witness={"vertex": vertex, "return_path": path.model_dump()},
            )
    return Verdict(holds=True, reasoning="every vertex is the base of zero or at least two return paths")


def has_isolated_cycles(graph: Graph) -> Verdict:
    """Every vertex is the base of at most one return path."""
    for vertex in graph.vertices:
        if return_path_class(graph, vertex) is ReturnPathClass.AT_LEAST_TWO:
            return Verdict(
                holds=False,
                reasoning=f"{vertex} is the base of at least two return paths",
                witness={"vertex": vertex},
            )
    return Verdict(holds=True, reasoning="closed paths are isolated")
