from fractions import Fraction

import pytest

from analyzers.trace import graph_trace_exists, trace_constraints, trace_null_set, verify_trace
from data.models import GraphTrace
from graph.constructions import compute_h0
from graph.core import is_acyclic
from graph.lattice import is_hereditary_saturated
from graph.models import Graph


def test_single_loop(single_loop):
    trace = graph_trace_exists(single_loop)
    assert trace.values == {"v": Fraction(1)}
    assert trace.norm == 1


def test_toeplitz(toeplitz):
    trace = graph_trace_exists(toeplitz)
    assert trace.values == {"v": Fraction(1), "w": Fraction(0)}
    assert trace_null_set(toeplitz, trace).vertices == ("w",)


def test_line_splits_weight_along_the_edge(line):
    trace = graph_trace_exists(line)
    assert trace.values["v"] == trace.values["w"] == Fraction(1, 2)


@pytest.mark.parametrize("loops", [2, 3, 4])
def test_roses_have_no_trace(build, loops):
    rose = build(["v"], [(f"e{i}", "v", "v", 1) for i in range(loops)])
    assert graph_trace_exists(rose) is None


def test_omega_targets_vanish(build):
    graph = build(["v", "w"], [("a", "v", "w", "omega")])
    trace = graph_trace_exists(graph)
    assert trace.values == {"v": Fraction(1), "w": Fraction(0)}


def test_empty_graph():
    assert graph_trace_exists(Graph()) is None


def test_verify_trace_reports_violations(toeplitz):
    assert verify_trace(toeplitz, GraphTrace(values={"v": Fraction(1), "w": Fraction(1)})) == ["additivity at v"]
    assert verify_trace(toeplitz, GraphTrace(values={"v": Fraction(1)})) == ["no value for w"]
    assert verify_trace(toeplitz, GraphTrace(values={"v": Fraction(-1), "w": Fraction(0)})) == ["v < 0"]


def test_constraints_are_labelled(omega_fork):
    labels = [c.label for c in trace_constraints(omega_fork)]
    assert labels == ["g(w) = 0 via g", "domination at v", "norm 1"]


def test_serialized_exactly():
    trace = GraphTrace(values={"v": Fraction(1, 3)})
    assert trace.model_dump(mode="json") == {"values": {"v": "1/3"}}


def test_traces_on_the_corpus(corpus):
    for graph in corpus:
        trace = graph_trace_exists(graph)
        if is_acyclic(graph):
            assert trace is not None, graph.name
        if trace is None:
            continue
        assert verify_trace(graph, trace) == [], graph.name
        assert trace.norm == 1
        null_set = trace_null_set(graph, trace)
        assert is_hereditary_saturated(graph, null_set).holds, graph.name
        assert set(compute_h0(graph).h0) <= null_set.members(), graph.name
