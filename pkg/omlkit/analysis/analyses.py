"""Concrete per-lattice analyses behind the batch subcommands.

Every analysis turns one lattice into a ``LatticeReport`` whose summary is
the stable text verdict and whose ``fields`` carry the same information for
JSON-lines output.
"""

# Standard library
from collections.abc import Sequence

# Local
from omlkit.analysis.godowski import ngo_scan
from omlkit.analysis.mge import generate_mge
from omlkit.analysis.simplex import print_problem, solve
from omlkit.analysis.states import pair_problem, strong_state_verdict
from omlkit.analysis.strategy import LatticeAnalysis
from omlkit.config.constants import Subcommand
from omlkit.equations.checker import check_equation
from omlkit.equations.dsl import format_equation
from omlkit.errors import PairSelectionError
from omlkit.lattice.greechie import serialize_diagram
from omlkit.lattice.laws import verify_laws
from omlkit.lattice.oml import OmlLattice
from omlkit.models.diagram import GreechieDiagram
from omlkit.models.equation import Equation
from omlkit.models.lp import LpStatus
from omlkit.models.run import LatticeReport
from omlkit.models.verdicts import NGoOutcome, StateOutcome


def _pairs_text(witness_labels: Sequence[str]) -> str:
    return ",".join(witness_labels)


class ParseAnalysis(LatticeAnalysis):
    """Report the normalized diagram and the size of its lattice."""

    def get_name(self) -> str:
        return Subcommand.PARSE.value

    def analyze(self, line: int, diagram: GreechieDiagram, lattice: OmlLattice) -> LatticeReport:
        text = serialize_diagram(diagram)
        return LatticeReport(
            line=line,
            summary=f"parsed {text} atoms={diagram.atom_count} blocks={diagram.block_count} elements={lattice.size}",
            fields={
                "verdict": "parsed",
                "diagram": text,
                "atoms": diagram.atom_count,
                "blocks": diagram.block_count,
                "elements": lattice.size,
            },
        )


class LawsAnalysis(LatticeAnalysis):
    """Run every law check and report each one, failing or not."""

    def get_name(self) -> str:
        return Subcommand.LAWS.value

    def build(self, diagram: GreechieDiagram, verify: bool) -> OmlLattice:
        # Law failures are this analysis' output, not a rejection
        return super().build(diagram, verify=False)

    def analyze(self, line: int, diagram: GreechieDiagram, lattice: OmlLattice) -> LatticeReport:
        report = verify_laws(lattice)
        checks = [
            {"law": check.law, "passed": check.passed, "counterexample": check.counterexample}
            for check in report.checks
        ]
        details = tuple(
            f"  {'pass' if check.passed else 'FAIL'} {check.law}"
            + (f" at ({', '.join(check.counterexample)})" if check.counterexample else "")
            for check in report.checks
        )
        failed = len(report.failures)
        summary = f"laws hold (checks={len(report.checks)})" if report.passed else f"laws fail (failed={failed})"
        return LatticeReport(
            line=line,
            summary=summary,
            details=details,
            fields={"verdict": "holds" if report.passed else "fails", "elements": lattice.size, "checks": checks},
        )


class CheckAnalysis(LatticeAnalysis):
    """Brute-force check of one equation."""

    def __init__(self, equation: Equation, var_cap: int | None = None, workers: int = 1) -> None:
        self.equation = equation
        self.var_cap = var_cap
        self.workers = workers

    def get_name(self) -> str:
        return Subcommand.CHECK.value

    def analyze(self, line: int, diagram: GreechieDiagram, lattice: OmlLattice) -> LatticeReport:
        result = check_equation(lattice, self.equation, var_cap=self.var_cap, workers=self.workers)
        if result.holds:
            return LatticeReport(
                line=line,
                summary=f"holds (assignments={result.assignments_tried})",
                fields={"verdict": "holds", "assignments": result.assignments_tried},
            )

        assert result.witness is not None
        witness = _pairs_text([f"{name}={label}" for name, label in result.witness.items()])
        return LatticeReport(
            line=line,
            summary=f"fails witness={witness}",
            fields={"verdict": "fails", "witness": result.witness},
        )


class NgoAnalysis(LatticeAnalysis):
    """Dynamic-programming n-Go scan."""

    def __init__(self, cutoff: int | None = None) -> None:
        self.cutoff = cutoff

    def get_name(self) -> str:
        return Subcommand.NGO.value

    def analyze(self, line: int, diagram: GreechieDiagram, lattice: OmlLattice) -> LatticeReport:
        verdict = ngo_scan(lattice, cutoff=self.cutoff)
        fields: dict[str, object]
        details: tuple[str, ...] = ()
        match verdict.outcome:
            case NGoOutcome.FAILS:
                assert verdict.chain is not None
                summary = f"fails n={verdict.n}"
                details = (f"  chain: {_pairs_text(verdict.chain)}",)
                fields = {"verdict": "fails", "n": verdict.n, "chain": list(verdict.chain)}
            case NGoOutcome.PASSES:
                summary = f"passes (converged k={verdict.converged_at})"
                fields = {"verdict": "passes", "converged_k": verdict.converged_at}
            case _:
                summary = f"inconclusive (cutoff={verdict.cutoff})"
                fields = {"verdict": "inconclusive", "cutoff": verdict.cutoff}

        return LatticeReport(line=line, summary=summary, details=details, fields=fields)


class StatesAnalysis(LatticeAnalysis):
    """Strong-state verdict by exact linear programming."""

    def __init__(self, all_pairs: bool = False) -> None:
        self.all_pairs = all_pairs

    def get_name(self) -> str:
        return Subcommand.STATES.value

    def analyze(self, line: int, diagram: GreechieDiagram, lattice: OmlLattice) -> LatticeReport:
        verdict = strong_state_verdict(lattice, all_pairs=self.all_pairs)
        if verdict.outcome is not StateOutcome.REFUTES:
            return LatticeReport(line=line, summary=verdict.outcome.value, fields={"verdict": verdict.outcome.value})

        assert verdict.witness is not None
        summary = f"refutes pair={verdict.witness}"
        fields: dict[str, object] = {"verdict": "refutes", "pair": str(verdict.witness)}
        details: tuple[str, ...] = ()
        if self.all_pairs:
            pairs = [str(pair) for pair in verdict.refuting_pairs]
            summary += f" refuting={len(pairs)}"
            fields["refuting_pairs"] = pairs
            details = tuple(f"  {pair.kind.value} {pair}" for pair in verdict.refuting_pairs)

        return LatticeReport(line=line, summary=summary, details=details, fields=fields)


class LpDumpAnalysis(LatticeAnalysis):
    """Print and solve the LP of one element pair."""

    def __init__(self, pair: tuple[str, str]) -> None:
        self.pair = pair

    def get_name(self) -> str:
        return Subcommand.LP_DUMP.value

    def analyze(self, line: int, diagram: GreechieDiagram, lattice: OmlLattice) -> LatticeReport:
        x, y = self.pair
        unknown = [label for label in self.pair if label not in lattice.labels]
        if unknown:
            raise PairSelectionError(f"no element labelled {unknown[0]!r} in this lattice")

        problem = pair_problem(lattice, x, y)
        outcome = solve(problem)
        minimum = str(outcome.value) if outcome.status is LpStatus.OPTIMAL else outcome.status.value
        listing = print_problem(problem)
        return LatticeReport(
            line=line,
            summary=f"lp pair=({x},{y}) min={minimum}",
            details=tuple(listing.splitlines()),
            fields={"pair": f"({x},{y})", "min": minimum, "problem": listing},
        )


class MgeAnalysis(LatticeAnalysis):
    """Synthesize an MGE from every lattice refuting strong states."""

    def __init__(self, corpus: Sequence[tuple[str, OmlLattice]] = (), seed: int | None = None) -> None:
        self.corpus = tuple(corpus)
        self.seed = seed

    def get_name(self) -> str:
        return Subcommand.MGE.value

    def analyze(self, line: int, diagram: GreechieDiagram, lattice: OmlLattice) -> LatticeReport:
        verdict = strong_state_verdict(lattice)
        if verdict.outcome is not StateOutcome.REFUTES:
            return LatticeReport(
                line=line,
                summary=f"skipped ({verdict.outcome.value})",
                fields={"verdict": "skipped", "states": verdict.outcome.value},
            )

        result = generate_mge(lattice, corpus=self.corpus, seed=self.seed, source=f"L{line}", verdict=verdict)
        condensed = result.condensed
        mge_text = format_equation(result.mge)
        witness = _pairs_text([f"{name}={label}" for name, label in result.witness_assignment.items()])
        details = (
            f"  weakened: {_pairs_text(result.weakened)}",
            f"  kept: {_pairs_text(result.kept)}",
            f"  atoms: {condensed.render_atoms()}",
            f"  mge: {mge_text}",
            f"  witness: {witness}",
            f"  corpus: holds on {len(result.corpus_checks)}",
        )
        return LatticeReport(
            line=line,
            summary=f"mge {condensed.render()} pair={result.pair}",
            details=details,
            fields={
                "verdict": "mge",
                "condensed": condensed.render(),
                "pair": str(result.pair),
                "weakened": list(result.weakened),
                "kept": list(result.kept),
                "atoms": condensed.render_atoms(),
                "mge": mge_text,
                "witness": result.witness_assignment,
                "corpus": {name: check.value for name, check in result.corpus_checks.items()},
            },
        )
