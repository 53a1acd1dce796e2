"""Unit tests for the per-lattice analyses."""

# Third-party
import pytest

# Local
from omlkit.analysis import (
    CheckAnalysis,
    LawsAnalysis,
    LpDumpAnalysis,
    MgeAnalysis,
    NgoAnalysis,
    ParseAnalysis,
    StatesAnalysis,
)
from omlkit.equations import generate_ngo, parse_equation
from omlkit.errors import PairSelectionError
from omlkit.lattice import build_lattice, parse_diagram
from omlkit.lattice.oml import OmlLattice
from omlkit.models.diagram import GreechieDiagram
from omlkit.models.run import ReportStatus

PETERSON = "123,345,567,789,9AB,BC1,2E8,4FA,6DC,DEF."


@pytest.fixture(scope="module")
def boolean_diagram() -> GreechieDiagram:
    """Diagram of the three-atom Boolean algebra."""
    return parse_diagram("123.", line_number=2)


@pytest.fixture(scope="module")
def peterson_diagram() -> GreechieDiagram:
    """Diagram of the Peterson lattice."""
    return parse_diagram(PETERSON, line_number=1)


class TestParseAnalysis:
    """Tests for ParseAnalysis."""

    @staticmethod
    def test_summary(boolean_diagram: GreechieDiagram, boolean: OmlLattice) -> None:
        """Should print the normalized diagram and its sizes."""
        report = ParseAnalysis().analyze(2, boolean_diagram, boolean)

        assert report.render_text() == "L2: parsed 123. atoms=3 blocks=1 elements=8"
        assert report.fields["elements"] == 8


class TestLawsAnalysis:
    """Tests for LawsAnalysis."""

    @staticmethod
    def test_holds(boolean_diagram: GreechieDiagram, boolean: OmlLattice) -> None:
        """Should report every law as passing."""
        report = LawsAnalysis().analyze(2, boolean_diagram, boolean)

        assert report.summary.startswith("laws hold (checks=")
        assert report.fields["verdict"] == "holds"
        assert all(check["passed"] for check in report.fields["checks"])
        assert all(line.startswith("  pass ") for line in report.details)

    @staticmethod
    def test_failure_listing(boolean_diagram: GreechieDiagram, hexagon: OmlLattice) -> None:
        """Should list the failing law with its counterexample."""
        report = LawsAnalysis().analyze(1, boolean_diagram, hexagon)

        assert report.summary.startswith("laws fail (failed=")
        assert "  FAIL orthomodular at (a, b)" in report.details

    @staticmethod
    def test_builds_without_verification(boolean_diagram: GreechieDiagram) -> None:
        """Should never reject a lattice for breaking a law."""
        lattice = LawsAnalysis().build(boolean_diagram, verify=True)

        assert lattice.size == 8


class TestCheckAnalysis:
    """Tests for CheckAnalysis."""

    @staticmethod
    def test_holds(boolean_diagram: GreechieDiagram, boolean: OmlLattice) -> None:
        """Should report the assignment count."""
        report = CheckAnalysis(generate_ngo(3)).analyze(2, boolean_diagram, boolean)

        assert report.render_text() == "L2: holds (assignments=512)"

    @staticmethod
    def test_fails(boolean_diagram: GreechieDiagram, boolean: OmlLattice) -> None:
        """Should report the first witness."""
        report = CheckAnalysis(parse_equation("a = b")).analyze(2, boolean_diagram, boolean)

        assert report.summary == "fails witness=a=0,b=I"
        assert report.fields == {"verdict": "fails", "witness": {"a": "0", "b": "I"}}


class TestNgoAnalysis:
    """Tests for NgoAnalysis."""

    @staticmethod
    def test_fails(peterson_diagram: GreechieDiagram, peterson: OmlLattice) -> None:
        """Should report n on the verdict line and the chain below it."""
        report = NgoAnalysis().analyze(1, peterson_diagram, peterson)

        assert report.summary == f"fails n={report.fields['n']}"
        assert report.details == (f"  chain: {','.join(report.fields['chain'])}",)
        assert len(report.fields["chain"]) == report.fields["n"]

    @staticmethod
    def test_passes(boolean_diagram: GreechieDiagram, boolean: OmlLattice) -> None:
        """Should report the convergence stage."""
        report = NgoAnalysis().analyze(2, boolean_diagram, boolean)

        assert report.summary == f"passes (converged k={report.fields['converged_k']})"


class TestStatesAnalysis:
    """Tests for StatesAnalysis."""

    @staticmethod
    def test_refutes(peterson_diagram: GreechieDiagram, peterson: OmlLattice) -> None:
        """Should report the first refuting pair."""
        report = StatesAnalysis().analyze(1, peterson_diagram, peterson)

        assert report.render_text() == "L1: refutes pair=(a1,a7')"

    @staticmethod
    def test_admits(boolean_diagram: GreechieDiagram, boolean: OmlLattice) -> None:
        """Should report admits."""
        report = StatesAnalysis().analyze(2, boolean_diagram, boolean)

        assert report.render_text() == "L2: admits"
        assert report.fields == {"verdict": "admits"}


class TestLpDumpAnalysis:
    """Tests for LpDumpAnalysis."""

    @staticmethod
    def test_listing(peterson_diagram: GreechieDiagram, peterson: OmlLattice) -> None:
        """Should print the minimum followed by the problem."""
        report = LpDumpAnalysis(("a1", "a7'")).analyze(1, peterson_diagram, peterson)

        assert report.summary == "lp pair=(a1,a7') min=1"
        assert report.details[0] == "min: m7';"
        assert report.details[-1] == "mD + mE + mF = 1;"
        assert report.fields["min"] == "1"

    @staticmethod
    def test_unknown_label(peterson_diagram: GreechieDiagram, peterson: OmlLattice) -> None:
        """Should refuse labels the lattice does not have."""
        with pytest.raises(PairSelectionError, match="a99"):
            LpDumpAnalysis(("a1", "a99")).analyze(1, peterson_diagram, peterson)


class TestMgeAnalysis:
    """Tests for MgeAnalysis."""

    @staticmethod
    def test_skips_admitting(boolean_diagram: GreechieDiagram, boolean: OmlLattice) -> None:
        """Should skip lattices with strong states."""
        report = MgeAnalysis().analyze(2, boolean_diagram, boolean)

        assert report.summary == "skipped (admits)"
        assert report.status is ReportStatus.OK

    @staticmethod
    def test_peterson(peterson_diagram: GreechieDiagram, peterson: OmlLattice) -> None:
        """Should report the condensed equation and its details."""
        report = MgeAnalysis().analyze(1, peterson_diagram, peterson)

        assert report.summary == "mge ab+cd+ef+gh=bg+fc+ad+he pair=(a1,a7')"
        assert report.fields["atoms"] == "45+9A+E8+6D=56+89+4A+DE"
        assert "  weakened: 123,567,789,BC1,4FA,DEF" in report.details
        assert "  corpus: holds on 0" in report.details


class TestAnalysisNames:
    """Tests for the strategy names."""

    @staticmethod
    def test_names_match_subcommands() -> None:
        """Should name each analysis after its subcommand."""
        names = [
            ParseAnalysis().get_name(),
            LawsAnalysis().get_name(),
            CheckAnalysis(generate_ngo(3)).get_name(),
            NgoAnalysis().get_name(),
            StatesAnalysis().get_name(),
            LpDumpAnalysis(("a1", "a2")).get_name(),
            MgeAnalysis().get_name(),
        ]

        assert names == ["parse", "laws", "check", "ngo", "states", "lp-dump", "mge"]

    @staticmethod
    def test_default_build_verifies() -> None:
        """Should build through build_lattice with the requested verification."""
        diagram = parse_diagram("123,345.")

        assert ParseAnalysis().build(diagram, verify=True).size == build_lattice(diagram).size
