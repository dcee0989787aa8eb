from enum import Enum
from fractions import Fraction
from typing import Annotated, Any, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, StrictInt, field_serializer

from graph.models import (
    Cycle,
    FinitenessCertificate,
    H0Decomposition,
    HSSet,
    LatticeSummary,
    Verdict,
    VertexClass,
)


class PISVerdict(BaseModel):
    """Purely infinite simplicity, condition by condition."""

    holds: bool
    trivial_lattice: Verdict
    has_cycle: Verdict
    condition_l: Verdict

    @property
    def failing(self) -> list[str]:
        return [
            name
            for name, verdict in (
                ("trivial_lattice", self.trivial_lattice),
                ("has_cycle", self.has_cycle),
                ("condition_l", self.condition_l),
            )
            if not verdict.holds
        ]


class QuotientCheck(BaseModel):
    """The purely-infinite-simple test applied to E minus H."""

    H: HSSet
    verdict: PISVerdict
    edge_finite: bool  # E minus H has no omega-bundle


class GraphTrace(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    values: dict[str, Fraction]

    @property
    def norm(self) -> Fraction:
        return sum(self.values.values(), Fraction(0))

    @field_serializer("values")
    def _exact(self, values: dict[str, Fraction]) -> dict[str, str]:
        return {vertex: str(value) for vertex, value in values.items()}


class CycleIsolation(BaseModel):
    """An exitless cycle left over after removing the closure of its exits."""

    vertex: str
    cycle: Cycle
    X: HSSet
    exitless: bool


class IdealLift(BaseModel):
    H: HSSet
    ideal_graph: Optional[FinitenessCertificate] = None
    ideal_graph_pis: Optional[bool] = None
    X: tuple[str, ...] = ()  # vertices reaching H
    Y: Optional[HSSet] = None  # the rest
    quotient_pis: Optional[bool] = None
    lifted: bool = False
    reasoning: str = ""


class IsolatedCycleDecomposition(BaseModel):
    h0: tuple[str, ...]
    H: HSSet
    check: bool
    reasoning: str = ""


class StableRankValue(str, Enum):
    ONE = "1"
    TWO = "2"
    INFINITE = "infinite"

    @property
    def symbol(self) -> str:
        return "∞" if self is StableRankValue.INFINITE else self.value


class StableRankCertificate(BaseModel):
    kind: Literal["acyclic", "pis_quotient", "exhaustion"]
    cycle: Optional[Cycle] = None  # a cycle, for the non-acyclic kinds
    H: Optional[HSSet] = None
    verdict: Optional[PISVerdict] = None
    examined: int = 0  # hereditary saturated sets tested
    edge_infinite: list[tuple[str, ...]] = []  # H whose quotient passes only under the unital reading
    decomposition: Optional[H0Decomposition] = None
    isolation: Optional[CycleIsolation] = None


class StableRank(BaseModel):
    value: StableRankValue
    mode: Literal["unital", "strict"] = "unital"
    certificate: StableRankCertificate
    alternate_value: StableRankValue
    divergence: bool = False

    @property
    def alternate_mode(self) -> str:
        return "strict" if self.mode == "unital" else "unital"


class ClassificationReport(BaseModel):
    """Every invariant the engine computes for one graph, in a fixed order."""

    graph: str
    vertices: int
    bundles: int
    vertex_classes: list[VertexClass] = []
    row_finite: Optional[bool] = None
    condition_l: Optional[Verdict] = None
    condition_k: Optional[Verdict] = None
    isolated_cycles: Optional[Verdict] = None
    lattice: Optional[LatticeSummary] = None
    admissible_pairs: Optional[int] = None
    purely_infinite_simple: Optional[PISVerdict] = None
    pis_quotients: list[QuotientCheck] = []
    trace: Optional[GraphTrace] = None
    isolated_cycle_decomposition: Optional[IsolatedCycleDecomposition] = None
    stable_rank: Optional[StableRank] = None
    errors: dict[str, str] = {}


Mult = Union[Annotated[StrictInt, Field(ge=0)], Literal["omega"]]


class EdgeDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: str
    src: str
    dst: str
    mult: Mult = 1


class GraphDocument(BaseModel):
    """The JSON input format."""

    model_config = ConfigDict(extra="forbid")

    name: str = "graph"
    vertices: list[str]
    edges: list[EdgeDocument] = []


class ReportDocument(BaseModel):
    tool: str
    version: str
    input_digest: str
    report: ClassificationReport


class CommandOutput(BaseModel):
    """Envelope for every non-report command."""

    command: str
    graph: str
    input_digest: str
    result: Any
