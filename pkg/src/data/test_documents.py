import json

import pytest

from analyzers import classification_report
from data.documents import (
    TOOL_NAME,
    command_output,
    dump_json,
    graph_schema,
    parse_graph,
    report_document,
    serialize_graph,
)
from graph.errors import DocumentParseError, GraphValidationError
from graph.lattice import closure

TOEPLITZ = """{
  "name": "toeplitz",
  "vertices": ["w", "v"],
  "edges": [
    {"id": "f", "src": "v", "dst": "w", "mult": 1},
    {"id": "e", "src": "v", "dst": "v"}
  ]
}"""


def test_parse(toeplitz):
    graph = parse_graph(TOEPLITZ)
    assert graph == toeplitz
    assert graph.bundle("e").multiplicity == 1


def test_omega_multiplicity():
    graph = parse_graph('{"vertices": ["v"], "edges": [{"id": "a", "src": "v", "dst": "v", "mult": "omega"}]}')
    assert graph.bundle("a").is_omega
    assert graph.name == "graph"


def test_invalid_json_reports_position():
    with pytest.raises(DocumentParseError) as info:
        parse_graph('{"vertices": ["v"],\n  "edges": [}')
    assert info.value.line == 2
    assert info.value.column is not None


@pytest.mark.parametrize(
    "text",
    [
        '{"edges": []}',
        '{"vertices": ["v"], "edges": [{"id": "a", "src": "v", "dst": "v", "mult": -1}]}',
        '{"vertices": ["v"], "edges": [{"id": "a", "src": "v", "dst": "v", "mult": "many"}]}',
        '{"vertices": ["v"], "edges": [{"id": "a", "src": "v", "dst": "v", "mult": 1.5}]}',
        '{"vertices": ["v"], "edges": [{"id": "a", "src": "v", "dst": "v", "weight": 1}]}',
        '{"vertices": ["v"], "colour": "red"}',
        "[]",
    ],
)
def test_shape_errors(text):
    with pytest.raises(DocumentParseError):
        parse_graph(text)


@pytest.mark.parametrize(
    "text, code",
    [
        ('{"vertices": ["v"], "edges": [{"id": "a", "src": "v", "dst": "v", "mult": 0}]}', "multiplicity_zero"),
        ('{"vertices": ["v"], "edges": [{"id": "a", "src": "v", "dst": "x"}]}', "dangling_endpoint"),
        ('{"vertices": ["v", "v"]}', "duplicate_identifier"),
    ],
)
def test_semantic_errors(text, code):
    with pytest.raises(GraphValidationError) as info:
        parse_graph(text)
    assert info.value.code == code


def test_serialize_is_canonical(toeplitz):
    document = json.loads(serialize_graph(toeplitz))
    assert document == {
        "name": "toeplitz",
        "vertices": ["v", "w"],
        "edges": [
            {"id": "e", "src": "v", "dst": "v", "mult": 1},
            {"id": "f", "src": "v", "dst": "w", "mult": 1},
        ],
    }
    assert parse_graph(serialize_graph(toeplitz)) == toeplitz


def test_digest_ignores_declaration_order(toeplitz):
    assert parse_graph(TOEPLITZ).digest() == toeplitz.digest()


def test_command_output_envelope(toeplitz):
    payload = json.loads(dump_json(command_output("closure", toeplitz, closure(toeplitz, ["w"]))))
    assert payload["command"] == "closure"
    assert payload["graph"] == "toeplitz"
    assert payload["input_digest"] == toeplitz.digest()
    assert payload["result"]["vertices"] == ["w"]


def test_report_document(omega_rose):
    payload = json.loads(dump_json(report_document(omega_rose, classification_report(omega_rose))))
    assert payload["tool"] == TOOL_NAME
    assert payload["report"]["stable_rank"]["value"] == "infinite"
    assert payload["report"]["vertex_classes"][0]["out_degree"] == "omega"


def test_unicode_is_kept(build):
    graph = build(["ω"], name="ωmega")
    assert "ωmega" in serialize_graph(graph)


def test_schema():
    schema = graph_schema()
    assert "vertices" in schema["properties"]
    assert schema["required"] == ["vertices"]
