"""Graph constructions: restriction, quotients by admissible pairs, finite
approximating graphs, the ideal graph of a hereditary saturated set, H0 and a
depth-truncated desingularization."""

import logging
from itertools import zip_longest
from typing import Iterable, Optional

import networkx as nx

from .core import classify_vertices, cycles_through, make_path, require_vertices, to_digraph, validate_graph
from .errors import AdmissibilityError, ConstructionError, PathCountError
from .lattice import VertexSetLike, as_vertex_set, breaking_vertices, closure, require_hereditary_saturated
from .models import (
    AdmissiblePair,
    Bundle,
    ConcreteEdge,
    DesingularizedGraph,
    FinitenessCertificate,
    Graph,
    H0Decomposition,
    Path,
    QuotientGraph,
    TowerStage,
    add_multiplicities,
    is_omega,
    sorted_vertices,
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_PATHS = 2**16


def _fresh(candidate: str, taken: set[str]) -> str:
    """``candidate`` with primes appended until it is unused; records the result."""
    while candidate in taken:
        candidate += "'"
    taken.add(candidate)
    return candidate


def restrict(graph: Graph, hs_set: VertexSetLike) -> Graph:
    """E minus H: vertices outside H and the bundles whose range lies outside H."""
    members = require_hereditary_saturated(graph, hs_set).members()
    return validate_graph(
        Graph(
            name=graph.name,
            vertices=tuple(v for v in graph.vertices if v not in members),
            bundles=tuple(b for b in graph.bundles if b.target not in members),
        )
    )


def quotient(graph: Graph, pair: AdmissiblePair) -> QuotientGraph:
    """E/(H,B): E minus H plus a sink v' for each v in B_H \\ B, fed by copies of the edges into v."""
    members = require_hereditary_saturated(graph, pair.H).members()
    breaking = set(breaking_vertices(graph, pair.H))
    stray = sorted(set(pair.B) - breaking)
    if stray:
        raise AdmissibilityError(f"{stray} are not breaking vertices of H")

    base = restrict(graph, members)
    vertex_origin = {v: "inherited" for v in base.vertices}
    bundle_origin = {b.id: "inherited" for b in base.bundles}
    vertex_ids = set(graph.vertices)
    bundle_ids = {b.id for b in graph.bundles}

    vertices = list(base.vertices)
    bundles = list(base.bundles)
    for vertex in sorted(breaking - set(pair.B)):
        copy = _fresh(f"{vertex}'", vertex_ids)
        vertices.append(copy)
        vertex_origin[copy] = f"breaking-copy:{vertex}"
        for bundle in base.bundles:
            if bundle.target != vertex:
                continue
            twin = _fresh(f"{bundle.id}'", bundle_ids)
            bundles.append(Bundle(id=twin, source=bundle.source, target=copy, multiplicity=bundle.multiplicity))
            bundle_origin[twin] = f"edge-copy:{bundle.id}"

    result = validate_graph(Graph(name=graph.name, vertices=tuple(vertices), bundles=tuple(bundles)))
    logger.debug("quotient of %s by H=%s, B=%s adds %d vertices", graph.name, pair.H.vertices, pair.B, len(vertices) - len(base.vertices))
    return QuotientGraph(
        graph=result,
        vertex_origin=dict(sorted(vertex_origin.items())),
        bundle_origin=dict(sorted(bundle_origin.items())),
    )


def _emits_outside(graph: Graph, vertex: str, selected: set[ConcreteEdge]) -> bool:
    total = add_multiplicities(b.multiplicity for b in graph.out_bundles(vertex))
    if is_omega(total):
        return True
    return total > sum(1 for e in selected if graph.bundle(e.bundle_id).source == vertex)


def approx_graph(graph: Graph, g0: Iterable[str], g1: Iterable[ConcreteEdge]) -> Graph:
    """The finite graph E_G built from vertices G^0 and concrete edges G^1.

    Its vertices are the edges of G^1 plus the G^0 vertices that are sinks in E
    or emit an edge outside G^1; (e, x) is an edge when r(e) = s(x), reading
    s(x) = x for a vertex x.
    """
    vertices = require_vertices(graph, g0)
    edges = sorted(set(g1), key=lambda e: (e.bundle_id, e.index))
    for edge in edges:
        path = make_path(graph, [edge])
        if path.range not in vertices:
            raise ConstructionError(f"range of {edge.label} is not in G^0")

    selected = set(edges)
    classes = classify_vertices(graph)
    taken = set()
    nodes: list[tuple[str, str]] = []  # (id in E_G, source in E)
    for edge in edges:
        nodes.append((_fresh(edge.label, taken), graph.bundle(edge.bundle_id).source))
    for vertex in sorted(vertices):
        if classes[vertex].is_sink or _emits_outside(graph, vertex, selected):
            nodes.append((_fresh(vertex, taken), vertex))

    bundles = []
    for edge_node, edge in zip(nodes, edges):
        target = graph.bundle(edge.bundle_id).target
        for node_id, node_source in nodes:
            if node_source == target:
                bundles.append(Bundle(id=f"({edge_node[0]},{node_id})", source=edge_node[0], target=node_id))

    return validate_graph(Graph(name=f"{graph.name}_G", vertices=tuple(n for n, _ in nodes), bundles=tuple(bundles)))


def tower_selection(graph: Graph, stage: int) -> list[ConcreteEdge]:
    """Concrete edges of stage ``stage``: every finite index, omega indices below ``stage``."""
    return [
        ConcreteEdge(bundle_id=b.id, index=i)
        for b in graph.bundles
        for i in (range(stage) if b.is_omega else b.indices())
    ]


def approx_tower(graph: Graph, steps: int) -> list[TowerStage]:
    """An increasing chain G_1 within ... within G_n and the graphs E_{G_i}."""
    if steps < 1:
        raise ConstructionError("a tower needs at least one stage")
    tower = []
    for stage in range(1, steps + 1):
        selection = tower_selection(graph, stage)
        tower.append(
            TowerStage(
                stage=stage,
                vertices=graph.vertices,
                edges=tuple(e.label for e in selection),
                graph=approx_graph(graph, graph.vertices, selection),
            )
        )
    return tower


def _entry_paths(graph: Graph, members: frozenset[str], feeding: set[str], max_paths: int) -> list[Path]:
    """All paths that start outside H, end in H and touch H only at the end.

    Depth-first over an explicit stack of edge iterators; more than
    ``max_paths`` paths raise ``PathCountError``.
    """
    moves = {
        vertex: [
            (bundle.target, ConcreteEdge(bundle_id=bundle.id, index=index))
            for bundle in graph.out_bundles(vertex)
            if bundle.target in members or bundle.target in feeding
            for index in bundle.indices()
        ]
        for vertex in feeding
    }

    found: list[Path] = []
    for start in sorted(feeding):
        walk: list[ConcreteEdge] = []
        stack = [iter(moves[start])]
        while stack:
            step = next(stack[-1], None)
            if step is None:
                stack.pop()
                if walk:
                    walk.pop()
                continue
            target, edge = step
            if target in members:
                found.append(make_path(graph, walk + [edge]))
                if len(found) > max_paths:
                    raise PathCountError(max_paths, len(found))
            else:
                walk.append(edge)
                stack.append(iter(moves[target]))
    return found


def ideal_graph(graph: Graph, hs_set: VertexSetLike, max_paths: Optional[int] = None) -> FinitenessCertificate:
    """The graph whose vertices are H and the paths entering H, when that set is finite."""
    bound = DEFAULT_MAX_PATHS if max_paths is None else max_paths
    if not as_vertex_set(hs_set):
        raise ConstructionError("the ideal graph of the empty set is vacuous")
    members = require_hereditary_saturated(graph, hs_set).members()

    digraph = to_digraph(graph)
    feeding: set[str] = set()
    for vertex in members:
        feeding |= nx.ancestors(digraph, vertex)
    feeding -= members

    try:
        loop = nx.find_cycle(digraph.subgraph(feeding))
    except nx.NetworkXNoCycle:
        loop = None
    if loop is not None:
        nodes = [source for source, _ in loop]
        start = nodes.index(min(nodes))
        cycle = cycles_through(graph, nodes[start:] + nodes[:start])[0]
        return FinitenessCertificate(
            finite=False,
            witness_kind="cycle",
            witness={"cycle": cycle.model_dump(), "reason": f"closed path {cycle.label} outside H reaches H"},
        )

    for bundle in graph.bundles:
        if bundle.is_omega and bundle.source not in members and (bundle.target in members or bundle.target in feeding):
            verb = "enters H" if bundle.target in members else f"lands on {bundle.target}, which reaches H"
            return FinitenessCertificate(
                finite=False,
                witness_kind="omega_bundle",
                witness={"bundle": bundle.id, "target": bundle.target, "reason": f"omega-bundle {bundle.id} from {bundle.source} {verb}"},
            )

    paths = _entry_paths(graph, members, feeding, bound)
    taken = set(members)
    path_ids = {_fresh(f"[{path.label}]", taken): path for path in paths}
    bundle_ids = {b.id for b in graph.bundles}
    bundles = [b for b in graph.bundles if b.source in members]
    for path_id, path in path_ids.items():
        bundles.append(Bundle(id=_fresh(f"bar{path_id}", bundle_ids), source=path_id, target=path.range))

    result = validate_graph(
        Graph(
            name=f"{graph.name}_H",
            vertices=tuple(sorted(members)) + tuple(path_ids),
            bundles=tuple(bundles),
        )
    )
    single_exit = all(
        len(result.out_bundles(p)) == 1
        and result.out_bundles(p)[0].multiplicity == 1
        and result.out_bundles(p)[0].target in members
        for p in path_ids
    )
    logger.debug("ideal graph of %s over %s: %d entry paths", graph.name, sorted(members), len(paths))
    return FinitenessCertificate(
        finite=True,
        graph=result,
        paths=dict(sorted(path_ids.items())),
        single_exit_verified=single_exit,
    )


def compute_h0(graph: Graph) -> H0Decomposition:
    """Vertices with two distinct edges whose ranges both lead back, and their closure."""
    digraph = to_digraph(graph)
    h0 = []
    for vertex in graph.vertices:
        upstream = nx.ancestors(digraph, vertex) | {vertex}
        returning = [b.multiplicity for b in graph.out_bundles(vertex) if b.target in upstream]
        total = add_multiplicities(returning)
        if is_omega(total) or total >= 2:
            h0.append(vertex)
    return H0Decomposition(h0=sorted_vertices(h0), H=closure(graph, h0))


def _emitter_schedule(graph: Graph, vertex: str, depth: int) -> list[ConcreteEdge]:
    """Finite bundles first by id, then omega indices 0..depth taken round-robin."""
    bundles = graph.out_bundles(vertex)
    schedule = [ConcreteEdge(bundle_id=b.id, index=i) for b in bundles if not b.is_omega for i in b.indices()]
    omega = [b for b in bundles if b.is_omega]
    rounds = zip_longest(*[[ConcreteEdge(bundle_id=b.id, index=i) for i in range(depth + 1)] for b in omega])
    schedule.extend(edge for layer in rounds for edge in layer if edge is not None)
    return schedule


def desingularize(graph: Graph, depth: int) -> DesingularizedGraph:
    """Row-finite approximation of the desingularization, truncated at ``depth``.

    Sinks grow a tail of ``depth`` vertices. An infinite emitter v becomes the
    head of a tail v = v_0 -> v_1 -> ... where v_j carries the j-th edge of its
    schedule.
    """
    if depth < 0:
        raise ConstructionError("depth must be non-negative")

    classes = classify_vertices(graph)
    vertex_ids = set(graph.vertices)
    bundle_ids = {b.id for b in graph.bundles}
    vertices = list(graph.vertices)
    provenance = {v: "original" for v in graph.vertices}
    bundles = [b for b in graph.bundles if not classes[b.source].is_infinite_emitter]
    truncation_sinks = []

    for vertex in graph.vertices:
        if classes[vertex].is_sink and depth >= 1:
            previous = vertex
            for k in range(1, depth + 1):
                step = _fresh(f"{vertex}~{k}", vertex_ids)
                vertices.append(step)
                provenance[step] = f"sink-tail:{vertex}:{k}"
                bundles.append(Bundle(id=_fresh(f"{vertex}~tail{k}", bundle_ids), source=previous, target=step))
                previous = step
            truncation_sinks.append(previous)
        elif classes[vertex].is_infinite_emitter:
            schedule = _emitter_schedule(graph, vertex, depth)
            tail = [vertex]
            for k in range(1, len(schedule)):
                step = _fresh(f"{vertex}~{k}", vertex_ids)
                vertices.append(step)
                provenance[step] = f"emitter-tail:{vertex}:{k}"
                bundles.append(Bundle(id=_fresh(f"{vertex}~tail{k}", bundle_ids), source=tail[-1], target=step))
                tail.append(step)
            for position, edge in zip(tail, schedule):
                target = graph.bundle(edge.bundle_id).target
                bundles.append(Bundle(id=_fresh(edge.label, bundle_ids), source=position, target=target))

    result = validate_graph(Graph(name=graph.name, vertices=tuple(vertices), bundles=tuple(bundles)))
    return DesingularizedGraph(
        graph=result,
        depth=depth,
        note=f"truncated at depth {depth}",
        provenance=dict(sorted(provenance.items())),
        truncation_sinks=sorted_vertices(truncation_sinks),
    )
