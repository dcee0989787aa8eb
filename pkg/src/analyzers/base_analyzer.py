import logging
from abc import ABC, abstractmethod
from typing import Any, Dict, Literal, Optional

from pydantic import BaseModel

from graph.errors import LeavittRankError, SizeGuardError
from graph.models import Graph
from utils.progress import progress

logger = logging.getLogger(__name__)


class AnalysisResult(BaseModel):
    """Standard result format for all analyzers"""

    analyzer: str
    status: Literal["ok", "error"] = "ok"
    holds: Optional[bool] = None  # for yes/no decisions
    summary: str = ""
    payload: Any = None  # the typed result (Verdict, StableRank, ...)


class BaseAnalyzer(ABC):
    """Base class for all graph analyzers"""

    def __init__(self, name: str, description: str = "", config: Dict[str, Any] = None):
        self.name = name
        self.description = description
        self.config = config or {}

    @abstractmethod
    def analyze(self, graph: Graph) -> AnalysisResult:
        """
        Main analysis method that each analyzer must implement.
        Returns the typed result wrapped in an AnalysisResult.
        """
        pass

    def run(self, graph: Graph) -> AnalysisResult:
        """
        Common execution flow for all analyzers.
        1. Reports progress
        2. Performs analysis
        3. Turns engine errors into an error result; size guards propagate
        """
        progress.update_status(self.name, graph.name, "Analyzing")
        try:
            result = self.analyze(graph)
        except SizeGuardError:
            progress.update_status(self.name, graph.name, "Error")
            raise
        except LeavittRankError as e:
            logger.warning("%s failed on %s: %s", self.name, graph.name, e)
            progress.update_status(self.name, graph.name, "Error")
            return AnalysisResult(analyzer=self.name, status="error", summary=f"Error analyzing graph: {e}")
        progress.update_status(self.name, graph.name, "Done")
        return result

    def result(self, payload: Any, summary: str, holds: Optional[bool] = None) -> AnalysisResult:
        return AnalysisResult(analyzer=self.name, holds=holds, summary=summary, payload=payload)
