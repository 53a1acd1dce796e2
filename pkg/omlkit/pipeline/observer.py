"""Observer pattern for batch progress tracking.

Decouples progress display, logging and metrics from the batch runner:
the runner emits events and any number of observers react to them.
"""

# Standard library
from abc import ABC, abstractmethod
from dataclasses import dataclass
from datetime import datetime
from enum import Enum
from typing import Any


class EventType(Enum):
    """Types of batch events that can be observed."""

    BATCH_STARTED = "batch_started"
    BATCH_COMPLETED = "batch_completed"

    LATTICE_STARTED = "lattice_started"
    LATTICE_COMPLETED = "lattice_completed"
    LATTICE_FAILED = "lattice_failed"


@dataclass(frozen=True)
class BatchEvent:
    """Immutable event object for batch notifications."""

    event_type: EventType
    timestamp: datetime
    analysis: str | None = None
    lattice_key: str | None = None
    message: str | None = None
    metadata: dict[str, Any] | None = None
    error: Exception | None = None

    def __str__(self) -> str:
        """Get string representation of event."""
        parts = [
            f"[{self.timestamp.isoformat()}]",
            self.event_type.value,
            f"analysis={self.analysis}" if self.analysis else None,
            f"lattice={self.lattice_key}" if self.lattice_key else None,
            self.message,
        ]

        return " ".join(filter(None, parts))


class BatchObserver(ABC):
    """Abstract observer for batch events.

    Specific hooks default to ``on_event``; override the ones you need.
    """

    @abstractmethod
    def on_event(self, event: BatchEvent) -> None:
        """Handle a batch event.

        Args:
            event: The event that occurred
        """
        ...

    def on_batch_started(self, event: BatchEvent) -> None:
        """Handle batch start event (optional override)."""
        self.on_event(event)

    def on_batch_completed(self, event: BatchEvent) -> None:
        """Handle batch completion event (optional override)."""
        self.on_event(event)

    def on_lattice_started(self, event: BatchEvent) -> None:
        """Handle lattice start event (optional override)."""
        self.on_event(event)

    def on_lattice_completed(self, event: BatchEvent) -> None:
        """Handle lattice completion event (optional override)."""
        self.on_event(event)

    def on_lattice_failed(self, event: BatchEvent) -> None:
        """Handle rejected lattice event (optional override)."""
        self.on_event(event)


class Observable:
    """Mixin class for objects that can be observed."""

    def __init__(self) -> None:
        """Initialize the observable with empty observer list."""
        self._observers: list[BatchObserver] = []

    def attach(self, observer: BatchObserver) -> None:
        """Attach an observer to receive event notifications."""
        if observer not in self._observers:
            self._observers.append(observer)

    # Event type to handler method mapping
    _EVENT_HANDLERS = {
        EventType.BATCH_STARTED: "on_batch_started",
        EventType.BATCH_COMPLETED: "on_batch_completed",
        EventType.LATTICE_STARTED: "on_lattice_started",
        EventType.LATTICE_COMPLETED: "on_lattice_completed",
        EventType.LATTICE_FAILED: "on_lattice_failed",
    }

    def notify(self, event: BatchEvent) -> None:
        """Notify all observers of an event.

        Args:
            event: Event to broadcast to observers
        """
        handler_name = self._EVENT_HANDLERS.get(event.event_type)

        for observer in self._observers:
            if handler_name:
                getattr(observer, handler_name)(event)

            else:
                observer.on_event(event)

    @staticmethod
    def create_event(
            event_type: EventType,
            analysis: str | None = None,
            lattice_key: str | None = None,
            message: str | None = None,
            metadata: dict[str, Any] | None = None,
            error: Exception | None = None,
    ) -> BatchEvent:
        """Create and return a batch event (helper method).

        Args:
            event_type: Type of event
            analysis: Name of the running analysis (optional)
            lattice_key: ``L<line>`` of the lattice (optional)
            message: Human-readable message (optional)
            metadata: Additional event data (optional)
            error: Exception if event is error-related (optional)

        Returns:
            Created BatchEvent
        """
        return BatchEvent(
            event_type=event_type,
            timestamp=datetime.now(),
            analysis=analysis,
            lattice_key=lattice_key,
            message=message,
            metadata=metadata,
            error=error,
        )
