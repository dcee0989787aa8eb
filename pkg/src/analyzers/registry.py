from typing import Dict, Type

from .analyzer_config import AnalyzerConfig
from .base_analyzer import BaseAnalyzer


class AnalyzerRegistry:
    """Registered analyzer classes and their configurations, by name"""

    _analyzers: Dict[str, Type[BaseAnalyzer]] = {}
    _configs: Dict[str, AnalyzerConfig] = {}

    @classmethod
    def register(cls, analyzer_class: Type[BaseAnalyzer], config: AnalyzerConfig) -> None:
        cls._analyzers[config.name] = analyzer_class
        cls._configs[config.name] = config

    @classmethod
    def lookup(cls, name: str) -> tuple[Type[BaseAnalyzer], AnalyzerConfig]:
        if name not in cls._analyzers:
            raise KeyError(f"Analyzer '{name}' not found; known analyzers: {', '.join(sorted(cls._analyzers))}")
        return cls._analyzers[name], cls._configs[name]

    @classmethod
    def list_analyzers(cls) -> Dict[str, str]:
        """Registered names and their descriptions"""
        return {name: config.description for name, config in cls._configs.items()}
