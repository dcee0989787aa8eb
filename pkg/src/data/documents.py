"""Reading graph documents and writing results as JSON."""

import json
from importlib import metadata
from typing import Any

from pydantic import BaseModel, ValidationError

from graph.core import validate_graph
from graph.errors import DocumentParseError
from graph.models import Bundle, Graph

from .models import ClassificationReport, CommandOutput, GraphDocument, ReportDocument

TOOL_NAME = "lpa-rank"


def tool_version() -> str:
    try:
        return metadata.version(TOOL_NAME)
    except metadata.PackageNotFoundError:
        return "0.1.0"


def parse_document(text: str) -> GraphDocument:
    """Syntax and shape only; semantic checks happen in ``validate_graph``."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentParseError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from e
    try:
        return GraphDocument.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise DocumentParseError(f"invalid graph document at '{location}': {first['msg']}") from e


def to_graph(document: GraphDocument) -> Graph:
    return validate_graph(
        Graph(
            name=document.name,
            vertices=tuple(document.vertices),
            bundles=tuple(Bundle(id=e.id, source=e.src, target=e.dst, multiplicity=e.mult) for e in document.edges),
        )
    )


def parse_graph(text: str) -> Graph:
    """Parse and validate a JSON graph document; ``"omega"`` is an infinite multiplicity."""
    return to_graph(parse_document(text))


def to_document(graph: Graph) -> GraphDocument:
    return GraphDocument.model_validate(graph.canonical_payload())


def dump_json(value: Any, indent: int = 2) -> str:
    """Deterministic JSON: declared field order, ``ensure_ascii`` off."""
    if isinstance(value, BaseModel):
        value = value.model_dump(mode="json")
    return json.dumps(value, indent=indent, ensure_ascii=False)


def serialize_graph(graph: Graph, indent: int = 2) -> str:
    return dump_json(to_document(graph), indent)


def report_document(graph: Graph, report: ClassificationReport) -> ReportDocument:
    return ReportDocument(tool=TOOL_NAME, version=tool_version(), input_digest=graph.digest(), report=report)


def command_output(command: str, graph: Graph, result: Any) -> CommandOutput:
    return CommandOutput(command=command, graph=graph.name, input_digest=graph.digest(), result=result)


def graph_schema() -> dict:
    return GraphDocument.model_json_schema()
