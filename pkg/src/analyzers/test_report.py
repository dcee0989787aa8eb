import pytest
from pydantic import ValidationError

from analyzers import AnalyzerConfig, AnalyzerFactory, AnalyzerRegistry, BaseAnalyzer, classification_report, run_analyzers
from data.documents import dump_json, report_document
from data.models import StableRankValue
from graph.errors import ConstructionError, LatticeSizeError
from utils.analyzers import ANALYZER_ORDER, display_name


class TestRegistry:
    def test_every_report_analyzer_is_registered(self):
        available = AnalyzerRegistry.list_analyzers()
        assert all(key in available for _, key in ANALYZER_ORDER)
        assert available["stable_rank"] == "Stable rank trichotomy with certificate"

    def test_parameters_are_merged(self):
        analyzer = AnalyzerFactory.create_analyzer("stable_rank", strict_finite=True)
        assert analyzer.config == {"strict_finite": True, "max_lattice": None, "workers": 1}
        assert AnalyzerFactory.create_analyzer("stable_rank").config["strict_finite"] is False

    def test_undeclared_parameters_are_dropped(self):
        assert AnalyzerFactory.create_analyzer("condition_l", max_lattice=5, workers=2).config == {}
        assert AnalyzerFactory.create_analyzer("lattice", max_lattice=5, workers=2).config == {"max_lattice": 5}

    @pytest.mark.parametrize("parameters", [{"max_lattice": 0}, {"workers": 0}, {"colour": "red"}])
    def test_bad_parameters(self, parameters):
        with pytest.raises(ValidationError):
            AnalyzerFactory.create_analyzer("lattice", **parameters)

    def test_declared_parameters_must_be_known(self):
        with pytest.raises(ValidationError):
            AnalyzerFactory.register_analyzer(FailingAnalyzer, AnalyzerConfig(name="odd", description="", parameters={"depth": 3}))
        assert "odd" not in AnalyzerRegistry.list_analyzers()

    def test_unknown_analyzer(self, isolated_vertex):
        with pytest.raises(KeyError):
            AnalyzerFactory.create_analyzer("sharpe_ratio")
        with pytest.raises(KeyError):
            run_analyzers(isolated_vertex, selected=["sharpe_ratio"])

    def test_display_names(self):
        assert display_name("stable_rank") == "Stable Rank"
        assert display_name("made_up") == "Made Up"


class FailingAnalyzer(BaseAnalyzer):
    def analyze(self, graph):
        raise ConstructionError("no construction applies")


def test_engine_errors_become_error_results(toeplitz):
    AnalyzerFactory.register_analyzer(FailingAnalyzer, AnalyzerConfig(name="failing", description="always fails"))
    result = AnalyzerFactory.create_analyzer("failing").run(toeplitz)
    assert result.status == "error"
    assert "no construction applies" in result.summary


def test_size_guard_propagates(toeplitz):
    with pytest.raises(LatticeSizeError):
        run_analyzers(toeplitz, selected=["lattice"], max_lattice=2)


def test_selected_analyzers_only(toeplitz):
    results = run_analyzers(toeplitz, selected=["condition_k", "condition_l"])
    assert list(results) == ["condition_l", "condition_k"]
    assert results["condition_l"].holds and not results["condition_k"].holds


class TestClassificationReport:
    def test_toeplitz(self, toeplitz):
        report = classification_report(toeplitz)
        assert report.vertices == 2 and report.bundles == 2
        assert report.row_finite
        assert report.condition_l.holds and not report.condition_k.holds
        assert report.lattice.size == 3
        assert report.admissible_pairs == 3
        assert not report.purely_infinite_simple.holds
        assert report.pis_quotients == []
        assert report.trace is not None
        assert report.stable_rank.value is StableRankValue.TWO
        assert report.errors == {}

    def test_rose(self, rose2):
        report = classification_report(rose2)
        assert report.purely_infinite_simple.holds
        assert report.trace is None
        assert report.stable_rank.value is StableRankValue.INFINITE
        assert [c.H.vertices for c in report.pis_quotients] == [()]

    def test_strict_reading(self, omega_rose):
        report = classification_report(omega_rose, strict_finite=True)
        assert report.stable_rank.value is StableRankValue.TWO
        assert report.stable_rank.divergence
        assert report.row_finite is False

    def test_output_is_deterministic(self, corpus):
        for graph in corpus[::5]:
            first = dump_json(report_document(graph, classification_report(graph)))
            second = dump_json(report_document(graph, classification_report(graph, workers=2)))
            assert first == second, graph.name
