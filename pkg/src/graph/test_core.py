import pytest

from graph.core import (
    classify_vertices,
    condition_k,
    condition_l,
    find_cycles,
    has_isolated_cycles,
    is_acyclic,
    is_row_finite,
    make_path,
    reachable_from,
    reaches,
    return_path_class,
    some_cycle,
    unique_return_path,
    validate_graph,
)
from graph.errors import GraphValidationError
from graph.models import OMEGA, ConcreteEdge, Graph, ReturnPathClass


class TestValidation:
    def test_canonical_order(self):
        graph = validate_graph(Graph.from_edges(["w", "v"], [("z", "w", "v", 1), ("a", "v", "w", 2)]))
        assert graph.vertices == ("v", "w")
        assert [b.id for b in graph.bundles] == ["a", "z"]

    def test_empty_graph_is_valid(self):
        assert validate_graph(Graph()).is_empty

    @pytest.mark.parametrize(
        "vertices, edges, code",
        [
            (["v", "v"], [], "duplicate_identifier"),
            (["v"], [("e", "v", "v", 1), ("e", "v", "v", 2)], "duplicate_identifier"),
            (["v"], [("e", "v", "w", 1)], "dangling_endpoint"),
            (["v"], [("e", "v", "v", 0)], "multiplicity_zero"),
            (["v"], [("e", "v", "v", -3)], "invalid_multiplicity"),
        ],
    )
    def test_rejects(self, vertices, edges, code):
        with pytest.raises(GraphValidationError) as info:
            validate_graph(Graph.from_edges(vertices, edges))
        assert info.value.code == code


def test_vertex_classes(build):
    graph = build(["s", "f", "i"], [("a", "f", "s", 1), ("b", "f", "s", 3), ("c", "i", "s", OMEGA), ("d", "i", "f", 1)])
    classes = classify_vertices(graph)
    assert classes["s"].is_sink and classes["s"].out_degree == 0
    assert classes["f"].is_finite_emitter and classes["f"].out_degree == 4
    assert classes["i"].is_infinite_emitter and classes["i"].out_degree == OMEGA
    assert classes["i"].kind == "infinite emitter"
    assert not is_row_finite(graph)


def test_reachability(line):
    assert reaches(line, "v", ["w"])
    assert not reaches(line, "w", ["v"])
    assert reaches(line, "w", ["w"])
    assert reachable_from(line, ["v"]) == {"v", "w"}
    with pytest.raises(GraphValidationError):
        reaches(line, "x", ["v"])


def test_make_path(toeplitz):
    path = make_path(toeplitz, [ConcreteEdge(bundle_id="e"), ConcreteEdge(bundle_id="f")])
    assert (path.source, path.range, path.length) == ("v", "w", 2)
    assert path.label == "e#0.f#0"
    assert make_path(toeplitz, [], source="w").length == 0

    with pytest.raises(GraphValidationError):
        make_path(toeplitz, [ConcreteEdge(bundle_id="f"), ConcreteEdge(bundle_id="e")])
    with pytest.raises(GraphValidationError):
        make_path(toeplitz, [ConcreteEdge(bundle_id="e", index=1)])


def test_omega_indices_are_unbounded(omega_rose):
    path = make_path(omega_rose, [ConcreteEdge(bundle_id="a", index=41)])
    assert path.label == "a#41"


class TestCycles:
    def test_acyclic(self, line):
        assert find_cycles(line) == []
        assert is_acyclic(line)
        assert some_cycle(line) is None

    def test_toeplitz_has_one_cycle(self, toeplitz):
        cycles = find_cycles(toeplitz)
        assert len(cycles) == 1
        assert cycles[0].label == "e#0"
        assert cycles[0].base == "v"

    def test_rose_cycles(self, rose2):
        assert [c.label for c in find_cycles(rose2)] == ["a#0", "b#0"]

    def test_rotation_starts_at_least_vertex(self, two_cycle):
        cycles = find_cycles(two_cycle)
        assert len(cycles) == 1
        assert cycles[0].vertices == ("v", "w")
        assert some_cycle(two_cycle).vertices == ("v", "w")


class TestConditionL:
    def test_loop_without_exit(self, single_loop):
        verdict = condition_l(single_loop)
        assert not verdict.holds
        assert verdict.witness["cycle"]["vertices"] == ("v",)

    def test_exit_present(self, toeplitz):
        assert condition_l(toeplitz).holds

    def test_omega_loop_has_exits(self, omega_rose):
        # distinct indices of one omega-bundle are distinct edges
        assert condition_l(omega_rose).holds

    def test_parallel_loops(self, build):
        assert condition_l(build(["v"], [("a", "v", "v", 2)])).holds


class TestReturnPaths:
    def test_toeplitz(self, toeplitz):
        assert return_path_class(toeplitz, "v") is ReturnPathClass.EXACTLY_ONE
        assert return_path_class(toeplitz, "w") is ReturnPathClass.ZERO

    def test_roses(self, rose2, omega_rose, build):
        assert return_path_class(rose2, "v") is ReturnPathClass.AT_LEAST_TWO
        assert return_path_class(omega_rose, "v") is ReturnPathClass.AT_LEAST_TWO
        assert return_path_class(build(["v"], [("a", "v", "v", 2)]), "v") is ReturnPathClass.AT_LEAST_TWO

    def test_two_cycle(self, two_cycle):
        assert return_path_class(two_cycle, "w") is ReturnPathClass.EXACTLY_ONE
        cycle = unique_return_path(two_cycle, "w")
        assert cycle.vertices == ("w", "v")
        assert cycle.label == "b#0.a#0"

    def test_loop_inside_the_return_region(self, build):
        # a loop at w gives v the return paths a c^n b
        graph = build(["v", "w"], [("a", "v", "w", 1), ("b", "w", "v", 1), ("c", "w", "w", 1)])
        assert return_path_class(graph, "v") is ReturnPathClass.AT_LEAST_TWO
        assert return_path_class(graph, "w") is ReturnPathClass.AT_LEAST_TWO

    def test_unknown_vertex(self, toeplitz):
        with pytest.raises(GraphValidationError):
            return_path_class(toeplitz, "x")


class TestConditionK:
    def test_fails_on_toeplitz(self, toeplitz):
        verdict = condition_k(toeplitz)
        assert not verdict.holds
        assert verdict.witness["vertex"] == "v"

    def test_holds(self, rose2, line, isolated_vertex):
        assert condition_k(rose2).holds
        assert condition_k(line).holds
        assert condition_k(isolated_vertex).holds


class TestIsolatedCycles:
    def test_isolated(self, single_loop, toeplitz, line):
        assert has_isolated_cycles(single_loop).holds
        assert has_isolated_cycles(toeplitz).holds
        assert has_isolated_cycles(line).holds

    def test_not_isolated(self, rose2):
        verdict = has_isolated_cycles(rose2)
        assert not verdict.holds
        assert verdict.witness == {"vertex": "v"}


def test_acyclic_graphs_have_conditions_k_and_isolation(corpus):
    for graph in corpus:
        if is_acyclic(graph):
            assert condition_k(graph).holds, graph.name
            assert has_isolated_cycles(graph).holds, graph.name
        if condition_k(graph).holds:
            assert condition_l(graph).holds, graph.name
