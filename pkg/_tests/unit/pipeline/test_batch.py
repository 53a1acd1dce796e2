"""Unit tests for the batch runner and the strong-state corpus loader."""

# Standard library
from pathlib import Path

# Third-party
import pytest

# Local
from omlkit.analysis import ParseAnalysis, StatesAnalysis
from omlkit.analysis.strategy import LatticeAnalysis
from omlkit.errors import DiagramFileError, InternalConsistencyError
from omlkit.lattice import parse_diagram
from omlkit.lattice.oml import OmlLattice
from omlkit.models.diagram import GreechieDiagram
from omlkit.models.run import LatticeReport, ReportStatus
from omlkit.pipeline.batch import BatchRunner, load_admitting_corpus
from omlkit.pipeline.observers import MetricsObserver


class BrokenAnalysis(LatticeAnalysis):
    """Strategy whose analysis trips an internal check."""

    def get_name(self) -> str:
        return "broken"

    def analyze(self, line: int, diagram: GreechieDiagram, lattice: OmlLattice) -> LatticeReport:
        raise InternalConsistencyError("replay mismatch")


class TestBatchRunnerInit:
    """Tests for BatchRunner defaults."""

    @staticmethod
    def test_defaults_from_settings(monkeypatch: pytest.MonkeyPatch) -> None:
        """Should take workers and verification from the settings."""
        monkeypatch.setenv("OMLKIT_WORKERS", "3")
        monkeypatch.setenv("OMLKIT_VERIFY_LAWS", "false")

        runner = BatchRunner(ParseAnalysis())

        assert runner.workers == 3
        assert runner.verify is False

    @staticmethod
    def test_explicit_values_win() -> None:
        """Should prefer explicit arguments."""
        runner = BatchRunner(ParseAnalysis(), workers=1, verify=True)

        assert runner.workers == 1
        assert runner.verify is True


class TestBatchRunnerRun:
    """Tests for BatchRunner.run and run_file."""

    @staticmethod
    @pytest.mark.parametrize("workers", [1, 3])
    def test_mixed_file(fixtures_dir: Path, workers: int) -> None:
        """Should keep input order and reject non-lattice pastings."""
        reports = BatchRunner(ParseAnalysis(), workers=workers).run_file(fixtures_dir / "mixed.gre")

        assert [report.key for report in reports] == ["L2", "L4", "L5", "L6"]
        assert [report.status for report in reports] == [
            ReportStatus.OK,
            ReportStatus.REJECTED,
            ReportStatus.REJECTED,
            ReportStatus.OK,
        ]
        assert reports[3].summary.endswith("elements=32")

    @staticmethod
    def test_rejection_fields(fixtures_dir: Path) -> None:
        """Should carry the construction error as the reason."""
        reports = BatchRunner(ParseAnalysis(), workers=1).run_file(fixtures_dir / "mixed.gre")

        rejected = reports[1]
        assert rejected.summary.startswith("rejected (")
        assert rejected.fields["verdict"] == "rejected"
        assert rejected.fields["reason"]

    @staticmethod
    def test_same_reports_for_any_pool_size(fixtures_dir: Path) -> None:
        """Should not depend on the worker count."""
        path = fixtures_dir / "corpus.gre"

        serial = BatchRunner(StatesAnalysis(), workers=1).run_file(path)
        parallel = BatchRunner(StatesAnalysis(), workers=4).run_file(path)

        assert serial == parallel
        assert all(report.summary == "admits" for report in serial)

    @staticmethod
    def test_strict_file_errors(fixtures_dir: Path) -> None:
        """Should stop at the first malformed line."""
        with pytest.raises(DiagramFileError) as excinfo:
            BatchRunner(ParseAnalysis(), workers=1).run_file(fixtures_dir / "malformed.gre")

        assert excinfo.value.line == 2

    @staticmethod
    def test_lenient_skips_malformed(fixtures_dir: Path) -> None:
        """Should keep the well-formed lines only."""
        reports = BatchRunner(ParseAnalysis(), workers=1).run_file(fixtures_dir / "malformed.gre", lenient=True)

        assert [report.key for report in reports] == ["L1"]

    @staticmethod
    def test_positions_without_source_lines() -> None:
        """Should number diagrams by position when they carry no line."""
        reports = BatchRunner(ParseAnalysis(), workers=1).run([parse_diagram("123."), parse_diagram("1234.")])

        assert [report.key for report in reports] == ["L1", "L2"]

    @staticmethod
    def test_internal_errors_propagate() -> None:
        """Should never turn an internal consistency failure into a rejection."""
        with pytest.raises(InternalConsistencyError):
            BatchRunner(BrokenAnalysis(), workers=1).run([parse_diagram("123.")])

    @staticmethod
    def test_notifies_observers(fixtures_dir: Path) -> None:
        """Should emit one completion or failure per lattice."""
        runner = BatchRunner(ParseAnalysis(), workers=2)
        metrics = MetricsObserver()
        runner.attach(metrics)

        runner.run_file(fixtures_dir / "mixed.gre")

        collected = metrics.get_metrics()
        assert collected["lattices_processed"] == 2
        assert collected["lattices_rejected"] == 2
        assert collected["events_by_type"]["batch_started"] == 1
        assert collected["events_by_type"]["lattice_started"] == 4


class TestLoadAdmittingCorpus:
    """Tests for load_admitting_corpus."""

    @staticmethod
    def test_corpus_file(fixtures_dir: Path) -> None:
        """Should keep every admitting lattice under its diagram text."""
        corpus = load_admitting_corpus(fixtures_dir / "corpus.gre")

        assert [name for name, _ in corpus] == ["123.", "123,345.", "123,345,567.", "123,145.", "1234.", "123,456."]

    @staticmethod
    def test_skips_rejected_and_refuting(fixtures_dir: Path) -> None:
        """Should drop non-lattices and lattices without strong states."""
        corpus = load_admitting_corpus(fixtures_dir / "mixed.gre")

        assert [name for name, _ in corpus] == ["123,345."]
