"""The one-import library surface, used the way a notebook would."""

from tools import api


def test_classify_from_a_document():
    graph = api.parse_graph(
        '{"name": "toeplitz", "vertices": ["v", "w"],'
        ' "edges": [{"id": "e", "src": "v", "dst": "v"}, {"id": "f", "src": "v", "dst": "w"}]}'
    )
    assert api.condition_l(graph).holds
    assert not api.condition_k(graph).holds
    assert api.stable_rank(graph).value is api.StableRankValue.TWO
    assert api.classification_report(graph).lattice.size == 3


def test_building_graphs_directly():
    graph = api.validate_graph(api.Graph.from_edges(["v"], [("a", "v", "v", api.OMEGA)], name="omega_rose"))
    rank = api.stable_rank(graph)
    assert rank.value is api.StableRankValue.INFINITE
    assert api.verify_certificate(graph, rank)
    assert api.parse_graph(api.serialize_graph(graph)) == graph


def test_exports_resolve():
    for name in api.__all__:
        assert getattr(api, name) is not None
