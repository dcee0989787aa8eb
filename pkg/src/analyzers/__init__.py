from .base_analyzer import BaseAnalyzer, AnalysisResult
from .analyzer_config import AnalyzerConfig
from .registry import AnalyzerRegistry
from .factory import AnalyzerFactory

# Import all analyzers
from .conditions import (
    ConditionKAnalyzer,
    ConditionLAnalyzer,
    IsolatedCyclesAnalyzer,
    LatticeAnalyzer,
    VertexClassAnalyzer,
)
from .purely_infinite import PISQuotientAnalyzer, PureInfinitenessAnalyzer
from .trace import TraceAnalyzer
from .decomposition import H0Analyzer
from .stable_rank import StableRankAnalyzer

# Register analyzers with their configurations
AnalyzerFactory.register_analyzer(
    VertexClassAnalyzer,
    AnalyzerConfig(name="vertex_classes", description="Classifies vertices as sinks, finite or infinite emitters"),
)

AnalyzerFactory.register_analyzer(
    ConditionLAnalyzer,
    AnalyzerConfig(name="condition_l", description="Every simple closed path has an exit"),
)

AnalyzerFactory.register_analyzer(
    ConditionKAnalyzer,
    AnalyzerConfig(name="condition_k", description="No vertex is the base of exactly one return path"),
)

AnalyzerFactory.register_analyzer(
    IsolatedCyclesAnalyzer,
    AnalyzerConfig(name="isolated_cycles", description="Every vertex is the base of at most one return path"),
)

AnalyzerFactory.register_analyzer(
    LatticeAnalyzer,
    AnalyzerConfig(
        name="lattice",
        description="Enumerates hereditary saturated sets and admissible pairs",
        parameters={"max_lattice": None},
    ),
)

AnalyzerFactory.register_analyzer(
    PureInfinitenessAnalyzer,
    AnalyzerConfig(name="purely_infinite_simple", description="Trivial lattice, a closed path and Condition (L)"),
)

AnalyzerFactory.register_analyzer(
    PISQuotientAnalyzer,
    AnalyzerConfig(
        name="pis_quotients",
        description="Hereditary saturated sets with a purely infinite simple quotient",
        parameters={"max_lattice": None, "workers": 1},
    ),
)

AnalyzerFactory.register_analyzer(
    TraceAnalyzer,
    AnalyzerConfig(name="graph_trace", description="Searches for a nonzero graph trace in exact arithmetic"),
)

AnalyzerFactory.register_analyzer(
    H0Analyzer,
    AnalyzerConfig(
        name="isolated_cycle_decomposition",
        description="Closure of the vertices with two returning edges and the isolated-cycle check",
    ),
)

AnalyzerFactory.register_analyzer(
    StableRankAnalyzer,
    AnalyzerConfig(
        name="stable_rank",
        description="Stable rank trichotomy with certificate",
        parameters={"strict_finite": False, "max_lattice": None, "workers": 1},
    ),
)

from .report import classification_report, run_analyzers  # noqa: E402

# Export commonly used classes and functions
__all__ = [
    "BaseAnalyzer",
    "AnalysisResult",
    "AnalyzerConfig",
    "AnalyzerRegistry",
    "AnalyzerFactory",
    "VertexClassAnalyzer",
    "ConditionLAnalyzer",
    "ConditionKAnalyzer",
    "IsolatedCyclesAnalyzer",
    "LatticeAnalyzer",
    "PureInfinitenessAnalyzer",
    "PISQuotientAnalyzer",
    "TraceAnalyzer",
    "H0Analyzer",
    "StableRankAnalyzer",
    "classification_report",
    "run_analyzers",
]
