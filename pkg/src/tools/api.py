"""
Library surface: graph types, constructions and decision procedures in one import.
"""

from graph.models import (
    OMEGA,
    AdmissiblePair,
    Bundle,
    ConcreteEdge,
    Cycle,
    Graph,
    HSSet,
    Path,
    ReturnPathClass,
    Verdict,
    VertexClass,
)
from data.models import ClassificationReport, GraphTrace, PISVerdict, StableRank, StableRankValue

from graph.core import (
    classify_vertices,
    condition_k,
    condition_l,
    find_cycles,
    has_isolated_cycles,
    is_acyclic,
    make_path,
    reaches,
    return_path_class,
    validate_graph,
)
from graph.lattice import (
    admissible_pairs,
    breaking_vertices,
    closure,
    enumerate_he,
    is_hereditary_saturated,
    is_trivial_lattice,
)
from graph.constructions import (
    approx_graph,
    approx_tower,
    compute_h0,
    desingularize,
    ideal_graph,
    quotient,
    restrict,
)
from analyzers import classification_report
from analyzers.decomposition import ideal_lift, isolate_cycle, isolated_cycle_decomposition
from analyzers.purely_infinite import pis_quotients, purely_infinite_simple
from analyzers.stable_rank import stable_rank, verify_certificate
from analyzers.trace import graph_trace_exists, trace_null_set, verify_trace
from data.documents import parse_graph, serialize_graph

__all__ = [
    # Models
    'OMEGA',
    'AdmissiblePair',
    'Bundle',
    'ConcreteEdge',
    'Cycle',
    'Graph',
    'HSSet',
    'Path',
    'ReturnPathClass',
    'Verdict',
    'VertexClass',
    'ClassificationReport',
    'GraphTrace',
    'PISVerdict',
    'StableRank',
    'StableRankValue',

    # Functions
    'validate_graph',
    'classify_vertices',
    'reaches',
    'make_path',
    'find_cycles',
    'is_acyclic',
    'condition_l',
    'return_path_class',
    'condition_k',
    'has_isolated_cycles',
    'closure',
    'is_hereditary_saturated',
    'enumerate_he',
    'is_trivial_lattice',
    'breaking_vertices',
    'admissible_pairs',
    'restrict',
    'quotient',
    'approx_graph',
    'approx_tower',
    'ideal_graph',
    'compute_h0',
    'desingularize',
    'purely_infinite_simple',
    'pis_quotients',
    'graph_trace_exists',
    'verify_trace',
    'trace_null_set',
    'stable_rank',
    'verify_certificate',
    'isolated_cycle_decomposition',
    'isolate_cycle',
    'ideal_lift',
    'classification_report',
    'parse_graph',
    'serialize_graph',
]
