import logging
from typing import Any, Type

from .analyzer_config import AnalyzerConfig, AnalyzerParameters
from .base_analyzer import BaseAnalyzer
from .registry import AnalyzerRegistry

logger = logging.getLogger(__name__)


class AnalyzerFactory:
    """Builds analyzers with checked parameters"""

    @staticmethod
    def create_analyzer(analyzer_type: str, **parameters: Any) -> BaseAnalyzer:
        """
        Create an analyzer from its registered configuration.

        Args:
            analyzer_type: The registered name of the analyzer
            **parameters: Engine-wide parameters (max_lattice, workers,
                strict_finite); the analyzer keeps the ones it declares

        Returns:
            An instance of the requested analyzer

        Raises:
            KeyError: no analyzer is registered under ``analyzer_type``
            pydantic.ValidationError: a parameter is unknown or out of range
        """
        analyzer_class, config = AnalyzerRegistry.lookup(analyzer_type)
        checked = AnalyzerParameters(**parameters).model_dump(include=set(parameters))
        accepted = {key: value for key, value in checked.items() if key in config.parameters}
        if len(accepted) < len(checked):
            logger.debug("%s ignores %s", analyzer_type, sorted(set(checked) - set(accepted)))
        return analyzer_class(
            name=config.name,
            description=config.description,
            config={**config.parameters, **accepted},
        )

    @staticmethod
    def register_analyzer(analyzer_class: Type[BaseAnalyzer], config: AnalyzerConfig) -> None:
        """Register an analyzer; its declared parameters must be known ones"""
        AnalyzerParameters(**config.parameters)
        AnalyzerRegistry.register(analyzer_class, config)
