"""Batch runner: one analysis over every diagram of a file.

Lattices are independent, so they are processed by a bounded thread pool;
reports come back in input order. A pasting that is not an OML, or a
per-lattice analysis failure, becomes a ``rejected`` report instead of
aborting the batch. Internal consistency failures always propagate.
"""

# Standard library
import threading
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any

# Local
from omlkit.analysis.states import strong_state_verdict
from omlkit.analysis.strategy import LatticeAnalysis
from omlkit.config.settings import get_settings
from omlkit.errors import LatticeConstructionError, MgeGenerationError, PairSelectionError, SimplexError
from omlkit.lattice.greechie import read_diagram_file, serialize_diagram
from omlkit.lattice.oml import OmlLattice, build_lattice
from omlkit.models.diagram import GreechieDiagram
from omlkit.models.run import LatticeReport, ReportStatus
from omlkit.models.verdicts import StateOutcome
from omlkit.pipeline.observer import EventType, Observable
from omlkit.utils.logging import get_logger

# Per-lattice failures reported as rejections
REJECTABLE = (LatticeConstructionError, PairSelectionError, MgeGenerationError, SimplexError)


class BatchRunner(Observable):
    """Runs one ``LatticeAnalysis`` over a batch of diagrams.

    Examples:
        >>> runner = BatchRunner(NgoAnalysis(), workers=2)
        >>> [report.render_text() for report in runner.run_file(Path("peterson.gre"))]
        ['L1: fails n=4\n  chain: a..,a..,a..,a..']
    """

    def __init__(self, analysis: LatticeAnalysis, workers: int | None = None, verify: bool | None = None) -> None:
        """Initialize the runner.

        Args:
            analysis: Strategy applied to every lattice.
            workers: Pool size (default: the ``workers`` setting).
            verify: Verify lattice laws while building (default: the ``verify_laws`` setting).
        """
        super().__init__()
        settings = get_settings()
        self.analysis = analysis
        self.workers = settings.workers if workers is None else workers
        self.verify = settings.verify_laws if verify is None else verify
        self.logger = get_logger(__name__)
        self._lock = threading.Lock()

    def _emit(
            self,
            event_type: EventType,
            lattice_key: str | None = None,
            message: str | None = None,
            metadata: dict[str, Any] | None = None,
            error: Exception | None = None,
    ) -> None:
        event = self.create_event(event_type, self.analysis.get_name(), lattice_key, message, metadata, error)
        with self._lock:
            self.notify(event)

    def run_file(self, path: Path, lenient: bool = False) -> list[LatticeReport]:
        """Read a diagram file and run the analysis on every diagram.

        Raises:
            DiagramFileError: On a malformed line when not lenient.
        """
        return self.run(read_diagram_file(path, lenient=lenient))

    def run(self, diagrams: Sequence[GreechieDiagram]) -> list[LatticeReport]:
        """Run the analysis on every diagram; reports are in input order."""
        self._emit(EventType.BATCH_STARTED, metadata={"total": len(diagrams)})
        self.logger.info("Running %s on %d lattices with %d workers", self.analysis.get_name(), len(diagrams), self.workers)

        lines = [diagram.source_line or position for position, diagram in enumerate(diagrams, start=1)]
        if self.workers > 1 and len(diagrams) > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                reports = list(pool.map(self.process, lines, diagrams))

        else:
            reports = [self.process(line, diagram) for line, diagram in zip(lines, diagrams, strict=True)]

        rejected = sum(report.status is ReportStatus.REJECTED for report in reports)
        self._emit(EventType.BATCH_COMPLETED, metadata={"total": len(reports), "rejected": rejected})
        return reports

    def process(self, line: int, diagram: GreechieDiagram) -> LatticeReport:
        """Build one lattice and analyze it."""
        key = f"L{line}"
        self._emit(EventType.LATTICE_STARTED, lattice_key=key)
        try:
            lattice = self.analysis.build(diagram, verify=self.verify)
            report = self.analysis.analyze(line, diagram, lattice)

        except REJECTABLE as error:
            self._emit(EventType.LATTICE_FAILED, lattice_key=key, message=str(error), error=error)
            return LatticeReport(
                line=line,
                status=ReportStatus.REJECTED,
                summary=f"rejected ({error})",
                fields={"verdict": "rejected", "reason": str(error)},
            )

        self._emit(EventType.LATTICE_COMPLETED, lattice_key=key, message=report.summary)
        return report


def load_admitting_corpus(path: Path, verify: bool = True) -> list[tuple[str, OmlLattice]]:
    """Lattices of a diagram file that admit a strong set of states.

    Diagrams that do not build, or whose verdict is not ``admits``, are
    skipped with a log message.

    Returns:
        ``(diagram text, lattice)`` pairs in file order.
    """
    logger = get_logger(__name__)
    corpus: list[tuple[str, OmlLattice]] = []
    for diagram in read_diagram_file(path):
        name = serialize_diagram(diagram)
        try:
            lattice = build_lattice(diagram, verify=verify)

        except LatticeConstructionError as error:
            logger.warning("Corpus diagram %s skipped: %s", name, error)
            continue

        outcome = strong_state_verdict(lattice).outcome
        if outcome is not StateOutcome.ADMITS:
            logger.info("Corpus diagram %s skipped: %s", name, outcome.value)
            continue

        corpus.append((name, lattice))

    return corpus
