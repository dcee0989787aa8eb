"""Brute-force counterparts of the decision procedures.

Each oracle is coded independently of the fast path it checks: subsets are
filtered instead of closed, walks are enumerated instead of regions computed.
They are exponential and meant for small graphs only.
"""

import logging
from itertools import combinations
from typing import Optional

import networkx as nx

from analyzers.stable_rank import stable_rank
from graph.constructions import ideal_graph, restrict
from graph.core import condition_k, condition_l, is_row_finite, return_path_class
from graph.lattice import enumerate_he, is_hereditary_saturated, is_trivial_lattice
from graph.models import Graph, ReturnPathClass

logger = logging.getLogger(__name__)

ORACLE_VERTEX_LIMIT = 10


def _subsets(vertices: tuple[str, ...]):
    for size in range(len(vertices) + 1):
        for chosen in combinations(vertices, size):
            yield frozenset(chosen)


def brute_force_lattice(graph: Graph) -> list[frozenset[str]]:
    """Every subset passing the hereditary and saturated checks, by size then lexicographically."""
    members = [s for s in _subsets(graph.vertices) if is_hereditary_saturated(graph, s).holds]
    return sorted(members, key=lambda s: (len(s), sorted(s)))


def bounded_return_class(graph: Graph, vertex: str) -> ReturnPathClass:
    """Count walks from ``vertex`` back to it that avoid it in between.

    Concrete edges are indices 0 (and 1 for bundles of multiplicity at least
    two or omega); each may be used at most twice per walk. Stops at two.
    """
    edges = [
        (bundle.source, bundle.target, (bundle.id, index))
        for bundle in graph.bundles
        for index in range(1 if bundle.multiplicity == 1 else 2)
    ]
    avoiding = nx.DiGraph((s, t) for s, t, _ in edges if vertex not in (s, t))
    avoiding.add_nodes_from(graph.vertices)
    avoiding.remove_node(vertex)
    feeders = {s for s, t, _ in edges if t == vertex and s != vertex}
    returning = set(feeders)
    for feeder in feeders:
        returning |= nx.ancestors(avoiding, feeder)
    found = 0

    def walk(current: str, used: dict) -> None:
        nonlocal found
        for source, target, key in edges:
            if found >= 2:
                return
            if source != current or used.get(key, 0) >= 2:
                continue
            if target == vertex:
                found += 1
                continue
            if target not in returning:
                continue
            used[key] = used.get(key, 0) + 1
            walk(target, used)
            used[key] -= 1

    walk(vertex, {})
    return [ReturnPathClass.ZERO, ReturnPathClass.EXACTLY_ONE, ReturnPathClass.AT_LEAST_TWO][min(found, 2)]


def brute_force_ideal_finite(graph: Graph, hs_set) -> Optional[int]:
    """Number of paths entering H (touching it only at the end), or None if infinitely many.

    Bundle paths are grown backwards from H up to length |V| + 1; reaching that
    length forces a repeated vertex, and any omega-bundle on the way yields
    infinitely many concrete paths.
    """
    members = frozenset(hs_set)
    limit = len(graph.vertices) + 1
    total = 0
    frontier = [(b.source, 1, b.multiplicity) for b in graph.bundles if b.target in members and b.source not in members]
    while frontier:
        source, length, count = frontier.pop()
        if count == "omega" or length >= limit:
            return None
        total += count
        for bundle in graph.in_bundles(source):
            if bundle.source in members:
                continue
            multiplicity = bundle.multiplicity
            frontier.append(
                (bundle.source, length + 1, "omega" if multiplicity == "omega" else count * multiplicity)
            )
    return total


def row_finite_stable_rank(graph: Graph) -> Optional[str]:
    """Trichotomy for row-finite graphs by subset filtering; None for other graphs."""
    if not is_row_finite(graph):
        return None
    digraph = nx.MultiDiGraph()
    digraph.add_nodes_from(graph.vertices)
    for bundle in graph.bundles:
        for _ in range(bundle.multiplicity):
            digraph.add_edge(bundle.source, bundle.target)
    if nx.is_directed_acyclic_graph(digraph):
        return "1"

    def hereditary_saturated(g: nx.MultiDiGraph, subset: frozenset[str]) -> bool:
        if any(t not in subset for s in subset for t in g.successors(s)):
            return False
        return not any(
            v not in subset and g.out_degree(v) > 0 and all(t in subset for t in g.successors(v)) for v in g.nodes
        )

    everything = frozenset(graph.vertices)
    for subset in _subsets(graph.vertices):
        if subset == everything or not hereditary_saturated(digraph, subset):
            continue
        rest = digraph.subgraph(everything - subset).copy()
        cycles = list(nx.simple_cycles(nx.DiGraph(rest)))
        if not cycles:
            continue
        if any(all(rest.out_degree(v) == 1 for v in cycle) for cycle in cycles):
            continue
        if any(
            0 < len(inner) < rest.number_of_nodes() and hereditary_saturated(rest, inner)
            for inner in _subsets(tuple(sorted(rest.nodes)))
        ):
            continue
        return "infinite"
    return "2"


def cross_check(graph: Graph, max_lattice: Optional[int] = None) -> list[str]:
    """Run every applicable oracle; returns a description of each disagreement."""
    if len(graph.vertices) > ORACLE_VERTEX_LIMIT:
        logger.warning("oracles skipped: %d vertices exceed the limit of %d", len(graph.vertices), ORACLE_VERTEX_LIMIT)
        return []

    mismatches = []
    lattice = [h.members() for h in enumerate_he(graph, max_lattice)]
    if lattice != brute_force_lattice(graph):
        mismatches.append("lattice: closure enumeration differs from subset filtering")
    if not graph.is_empty and is_trivial_lattice(graph).holds != (len(lattice) == 2):
        mismatches.append("lattice: singleton-closure triviality differs from the lattice size")

    for vertex in graph.vertices:
        fast, slow = return_path_class(graph, vertex), bounded_return_class(graph, vertex)
        if fast is not slow:
            mismatches.append(f"return paths at {vertex}: region gives {fast.value}, walks give {slow.value}")

    quotient_criterion = all(condition_l(restrict(graph, h)).holds for h in lattice)
    if condition_k(graph).holds != quotient_criterion:
        mismatches.append("condition K differs from Condition (L) on every quotient")

    for h in lattice:
        if not h:
            continue
        certificate = ideal_graph(graph, h)
        count = brute_force_ideal_finite(graph, h)
        if certificate.finite != (count is not None):
            mismatches.append(f"ideal graph over {sorted(h)}: finiteness differs from path enumeration")
        elif certificate.finite and len(certificate.paths) != count:
            mismatches.append(f"ideal graph over {sorted(h)}: {len(certificate.paths)} path vertices, expected {count}")

    expected = row_finite_stable_rank(graph)
    if expected is not None:
        actual = stable_rank(graph, max_lattice=max_lattice).value.value
        if actual != expected:
            mismatches.append(f"stable rank {actual} differs from the row-finite criterion {expected}")

    for mismatch in mismatches:
        logger.error("oracle mismatch on %s: %s", graph.name, mismatch)
    return mismatches
