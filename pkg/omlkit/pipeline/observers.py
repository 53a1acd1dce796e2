"""Concrete observers for batch monitoring: logging, progress bar and metrics."""

# Standard library
from typing import Any

# Third-party
from rich.console import Console
from rich.progress import (
    BarColumn,
    MofNCompleteColumn,
    Progress,
    SpinnerColumn,
    TaskID,
    TextColumn,
    TimeElapsedColumn,
)

# Local
from omlkit.pipeline.observer import BatchEvent, BatchObserver, EventType
from omlkit.utils.logging import get_logger


class LogObserver(BatchObserver):
    """Observer that forwards batch events to the logging system.

    Rejections are warnings; everything else is logged at debug level,
    except batch boundaries which are info.
    """

    _EVENT_LEVELS = {
        EventType.BATCH_STARTED: "info",
        EventType.BATCH_COMPLETED: "info",
        EventType.LATTICE_FAILED: "warning",
    }

    def __init__(self) -> None:
        """Initialize log observer."""
        self.logger = get_logger(__name__)

    def on_event(self, event: BatchEvent) -> None:
        """Log the event at its level."""
        level = self._EVENT_LEVELS.get(event.event_type, "debug")
        getattr(self.logger, level)("%s", event)


class ProgressBarObserver(BatchObserver):
    """Observer that displays a rich progress bar on standard error.

    Standard output stays reserved for verdict lines.
    """

    def __init__(self, console: Console | None = None) -> None:
        """Initialize progress bar observer.

        Args:
            console: Console to draw on (default: a stderr console)
        """
        self.progress = Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            MofNCompleteColumn(),
            TimeElapsedColumn(),
            console=console or Console(stderr=True),
        )
        self.task: TaskID | None = None
        self.started = False

    def on_event(self, event: BatchEvent) -> None:
        """Handle events without specific handlers (no-op for progress bar)."""
        ...

    def on_batch_started(self, event: BatchEvent) -> None:
        """Start the display with one task for the whole batch."""
        total = (event.metadata or {}).get("total")
        if not self.started:
            self.progress.start()
            self.started = True

        self.task = self.progress.add_task(f"[cyan]{event.analysis}", total=total)

    def on_batch_completed(self, event: BatchEvent) -> None:
        """Stop the progress display."""
        self.close()

    def on_lattice_completed(self, event: BatchEvent) -> None:
        """Advance the progress bar."""
        if self.task is not None:
            self.progress.advance(self.task, 1)

    def on_lattice_failed(self, event: BatchEvent) -> None:
        """Advance the progress bar and show the rejected lattice."""
        if self.task is not None:
            self.progress.update(self.task, description=f"[red]{event.analysis}[/red] ✗ {event.lattice_key}")
            self.progress.advance(self.task, 1)

    def close(self) -> None:
        """Stop the display if it is running."""
        if self.started:
            self.progress.stop()
            self.started = False

    def __enter__(self) -> "ProgressBarObserver":
        """Enter context manager."""
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        """Exit context manager and clean up resources."""
        self.close()


class MetricsObserver(BatchObserver):
    """Observer that counts processed and rejected lattices."""

    def __init__(self) -> None:
        """Initialize metrics observer."""
        self.metrics: dict[str, Any] = {
            "lattices_processed": 0,
            "lattices_rejected": 0,
            "events_by_type": {},
        }

    def on_event(self, event: BatchEvent) -> None:
        """Count events by type."""
        event_name = event.event_type.value
        self.metrics["events_by_type"][event_name] = self.metrics["events_by_type"].get(event_name, 0) + 1

    def on_lattice_completed(self, event: BatchEvent) -> None:
        """Increment processed lattice count."""
        self.metrics["lattices_processed"] += 1
        self.on_event(event)

    def on_lattice_failed(self, event: BatchEvent) -> None:
        """Increment rejected lattice count."""
        self.metrics["lattices_rejected"] += 1
        self.on_event(event)

    def get_metrics(self) -> dict[str, Any]:
        """Get collected metrics."""
        return self.metrics.copy()
