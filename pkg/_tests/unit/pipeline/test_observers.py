"""Unit tests for the concrete batch observers."""

# Standard library
import io
import logging

# Third-party
import pytest
from rich.console import Console

# Local
from omlkit.pipeline.observer import EventType, Observable
from omlkit.pipeline.observers import LogObserver, MetricsObserver, ProgressBarObserver


class TestLogObserver:
    """Tests for LogObserver."""

    @staticmethod
    def test_rejections_are_warnings(caplog: pytest.LogCaptureFixture) -> None:
        """Should log a failed lattice as a warning."""
        caplog.set_level(logging.DEBUG, logger="omlkit.pipeline.observers")
        observer = LogObserver()

        observer.on_lattice_failed(Observable.create_event(EventType.LATTICE_FAILED, lattice_key="L4"))

        assert caplog.records[-1].levelno == logging.WARNING
        assert "lattice=L4" in caplog.records[-1].getMessage()

    @staticmethod
    def test_levels(caplog: pytest.LogCaptureFixture) -> None:
        """Should log batch boundaries at info and lattice progress at debug."""
        caplog.set_level(logging.DEBUG, logger="omlkit.pipeline.observers")
        observer = LogObserver()

        observer.on_batch_started(Observable.create_event(EventType.BATCH_STARTED))
        observer.on_lattice_completed(Observable.create_event(EventType.LATTICE_COMPLETED))

        assert [record.levelno for record in caplog.records] == [logging.INFO, logging.DEBUG]


class TestMetricsObserver:
    """Tests for MetricsObserver."""

    @staticmethod
    def test_counts() -> None:
        """Should count processed and rejected lattices."""
        observer = MetricsObserver()

        observer.on_lattice_completed(Observable.create_event(EventType.LATTICE_COMPLETED))
        observer.on_lattice_completed(Observable.create_event(EventType.LATTICE_COMPLETED))
        observer.on_lattice_failed(Observable.create_event(EventType.LATTICE_FAILED))

        metrics = observer.get_metrics()
        assert metrics["lattices_processed"] == 2
        assert metrics["lattices_rejected"] == 1
        assert metrics["events_by_type"] == {"lattice_completed": 2, "lattice_failed": 1}


class TestProgressBarObserver:
    """Tests for ProgressBarObserver."""

    @staticmethod
    def test_tracks_batch() -> None:
        """Should advance once per finished lattice and stop at the end."""
        observer = ProgressBarObserver(console=Console(file=io.StringIO()))

        observer.on_batch_started(Observable.create_event(EventType.BATCH_STARTED, "ngo", metadata={"total": 2}))
        observer.on_lattice_completed(Observable.create_event(EventType.LATTICE_COMPLETED))
        observer.on_lattice_failed(Observable.create_event(EventType.LATTICE_FAILED, "ngo", lattice_key="L4"))

        task = observer.progress.tasks[0]
        assert task.total == 2
        assert task.completed == 2
        assert "L4" in task.description

        observer.on_batch_completed(Observable.create_event(EventType.BATCH_COMPLETED))
        assert observer.started is False

    @staticmethod
    def test_context_manager_closes() -> None:
        """Should stop the display on exit."""
        with ProgressBarObserver(console=Console(file=io.StringIO())) as observer:
            observer.on_batch_started(Observable.create_event(EventType.BATCH_STARTED, "parse", metadata={"total": 1}))
            assert observer.started is True

        assert observer.started is False

    @staticmethod
    def test_ignores_events_before_start() -> None:
        """Should not fail when lattices finish before a batch starts."""
        observer = ProgressBarObserver(console=Console(file=io.StringIO()))

        observer.on_lattice_completed(Observable.create_event(EventType.LATTICE_COMPLETED))

        assert observer.task is None
