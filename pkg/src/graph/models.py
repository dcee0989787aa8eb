"""Domain types for finitely presented graphs.

A graph is a finite vertex set plus edge *bundles*. A bundle stands for
``multiplicity`` parallel edges with a common source and range; the
multiplicity is a positive integer or ``"omega"`` (countably many edges), so a
vertex is an infinite emitter exactly when one of its bundles is an
omega-bundle. Individual edges are addressed as ``ConcreteEdge(bundle, index)``.
"""

import hashlib
import json
from enum import Enum
from typing import Iterable, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, PrivateAttr, field_validator, model_serializer

OMEGA = "omega"

Multiplicity = Union[int, Literal["omega"]]


def is_omega(multiplicity: Multiplicity) -> bool:
    return multiplicity == OMEGA


def add_multiplicities(values: Iterable[Multiplicity]) -> Multiplicity:
    """Sum multiplicities; omega absorbs everything."""
    total = 0
    for value in values:
        if is_omega(value):
            return OMEGA
        total += value
    return total


def format_multiplicity(multiplicity: Multiplicity, unicode: bool = False) -> str:
    if is_omega(multiplicity):
        return "ω" if unicode else OMEGA
    return str(multiplicity)


def sorted_vertices(vertices: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(set(vertices)))


class Bundle(BaseModel):
    """``multiplicity`` parallel edges from ``source`` to ``target``."""

    model_config = ConfigDict(frozen=True)

    id: str
    source: str
    target: str
    multiplicity: Multiplicity = 1

    @property
    def is_omega(self) -> bool:
        return is_omega(self.multiplicity)

    def indices(self, limit: Optional[int] = None) -> range:
        """Concrete edge indices of the bundle, capped at ``limit`` for omega-bundles."""
        if self.is_omega:
            return range(limit if limit is not None else 1)
        return range(self.multiplicity if limit is None else min(limit, self.multiplicity))


class Graph(BaseModel):
    """Immutable finite presentation of a (possibly non-row-finite) graph."""

    model_config = ConfigDict(frozen=True)

    name: str = "graph"
    vertices: tuple[str, ...] = ()
    bundles: tuple[Bundle, ...] = ()

    _by_id: dict[str, Bundle] = PrivateAttr(default_factory=dict)
    _out: dict[str, list[Bundle]] = PrivateAttr(default_factory=dict)
    _in: dict[str, list[Bundle]] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context) -> None:
        for bundle in sorted(self.bundles, key=lambda b: b.id):
            self._by_id.setdefault(bundle.id, bundle)
            self._out.setdefault(bundle.source, []).append(bundle)
            self._in.setdefault(bundle.target, []).append(bundle)

    @classmethod
    def from_edges(
        cls,
        vertices: Iterable[str],
        edges: Iterable[tuple[str, str, str, Multiplicity]] = (),
        name: str = "graph",
    ) -> "Graph":
        """Build a graph from ``(id, source, target, multiplicity)`` tuples."""
        return cls(
            name=name,
            vertices=tuple(vertices),
            bundles=tuple(Bundle(id=b, source=s, target=t, multiplicity=m) for b, s, t, m in edges),
        )

    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    def bundle(self, bundle_id: str) -> Bundle:
        if bundle_id in self._by_id:
            return self._by_id[bundle_id]
        raise KeyError(f"Bundle '{bundle_id}' not found in graph '{self.name}'")

    def out_bundles(self, vertex: str) -> list[Bundle]:
        return list(self._out.get(vertex, ()))

    def in_bundles(self, vertex: str) -> list[Bundle]:
        return list(self._in.get(vertex, ()))

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def canonical_payload(self) -> dict:
        return {
            "name": self.name,
            "vertices": list(self.vertices),
            "edges": [
                {"id": b.id, "src": b.source, "dst": b.target, "mult": b.multiplicity}
                for b in self.bundles
            ],
        }

    @model_serializer
    def _as_document(self) -> dict:
        return self.canonical_payload()

    def digest(self) -> str:
        """SHA-256 of the canonical document form; stable across runs."""
        payload = json.dumps(self.canonical_payload(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()


class ConcreteEdge(BaseModel):
    """One edge inside a bundle."""

    model_config = ConfigDict(frozen=True)

    bundle_id: str
    index: int = 0

    @property
    def label(self) -> str:
        return f"{self.bundle_id}#{self.index}"

    @classmethod
    def parse(cls, label: str) -> "ConcreteEdge":
        bundle_id, _, index = label.strip().rpartition("#")
        if not bundle_id:
            return cls(bundle_id=label.strip(), index=0)
        return cls(bundle_id=bundle_id, index=int(index))


class Path(BaseModel):
    """A finite path; an empty edge tuple is the length-zero path at ``source``."""

    model_config = ConfigDict(frozen=True)

    source: str
    range: str
    edges: tuple[ConcreteEdge, ...] = ()

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def label(self) -> str:
        if not self.edges:
            return self.source
        return ".".join(edge.label for edge in self.edges)


class Cycle(BaseModel):
    """A simple closed path; ``vertices[i]`` is the source of ``edges[i]``."""

    model_config = ConfigDict(frozen=True)

    vertices: tuple[str, ...]
    edges: tuple[ConcreteEdge, ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def base(self) -> str:
        return self.vertices[0]

    @property
    def label(self) -> str:
        return ".".join(edge.label for edge in self.edges)


class VertexClass(BaseModel):
    model_config = ConfigDict(frozen=True)

    vertex: str
    is_sink: bool
    is_finite_emitter: bool
    is_infinite_emitter: bool
    out_degree: Multiplicity

    @property
    def kind(self) -> str:
        if self.is_sink:
            return "sink"
        return "infinite emitter" if self.is_infinite_emitter else "finite emitter"


class ReturnPathClass(str, Enum):
    """How many closed paths based at a vertex meet it only at their endpoints."""

    ZERO = "zero"
    EXACTLY_ONE = "exactly_one"
    AT_LEAST_TWO = "at_least_two"


class HSSet(BaseModel):
    """A vertex set certified hereditary and saturated."""

    model_config = ConfigDict(frozen=True)

    vertices: tuple[str, ...] = ()
    hereditary_checked: bool = False
    saturated_checked: bool = False
    stages: dict[str, int] = {}  # vertex -> Lambda stage it entered at (closures only)

    @field_validator("vertices")
    @classmethod
    def _canonical(cls, value: tuple[str, ...]) -> tuple[str, ...]:
        return sorted_vertices(value)

    def members(self) -> frozenset[str]:
        return frozenset(self.vertices)

    def __contains__(self, vertex: object) -> bool:
        return vertex in self.vertices


class AdmissiblePair(BaseModel):
    model_config = ConfigDict(frozen=True)

    H: HSSet
    B: tuple[str, ...] = ()

    @field_validator("B")
    @classmethod
    def _canonical(cls, value: tuple[str, ...]) -> tuple[str, ...]:
        return sorted_vertices(value)


class Verdict(BaseModel):
    """A boolean decision with the evidence behind it."""

    holds: bool
    reasoning: str = ""
    witness: dict = {}

    def __bool__(self) -> bool:
        return self.holds


class LatticeSummary(BaseModel):
    size: int
    trivial: bool
    members: list[tuple[str, ...]]


class QuotientGraph(BaseModel):
    """E/(H,B) together with where each vertex and bundle came from."""

    graph: Graph
    vertex_origin: dict[str, str] = {}  # "inherited" or "breaking-copy:<v>"
    bundle_origin: dict[str, str] = {}  # "inherited" or "edge-copy:<e>"


class TowerStage(BaseModel):
    stage: int
    vertices: tuple[str, ...]
    edges: tuple[str, ...]  # concrete edge labels of G^1
    graph: Graph


class FinitenessCertificate(BaseModel):
    """Either the finite ideal graph or a checkable reason it is infinite."""

    finite: bool
    graph: Optional[Graph] = None
    paths: dict[str, Path] = {}  # path-vertex id -> the path it stands for
    single_exit_verified: bool = False
    witness_kind: Optional[Literal["cycle", "omega_bundle"]] = None
    witness: dict = {}


class H0Decomposition(BaseModel):
    h0: tuple[str, ...]
    H: HSSet


class DesingularizedGraph(BaseModel):
    graph: Graph
    depth: int
    note: str
    provenance: dict[str, str] = {}  # vertex -> "original", "sink-tail:<w>:<k>" or "emitter-tail:<v>:<k>"
    truncation_sinks: tuple[str, ...] = ()
