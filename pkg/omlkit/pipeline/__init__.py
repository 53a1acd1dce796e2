"""Batch processing of diagram files.

Exports:
    Observer pattern:
        - EventType: Enum of batch event types
        - BatchEvent: Immutable event data class
        - BatchObserver: Abstract observer interface
        - Observable: Mixin for observable objects
        - LogObserver: Logging observer
        - ProgressBarObserver: Progress bar observer
        - MetricsObserver: Metrics collection observer

    Orchestration:
        - BatchRunner: Runs one analysis over every lattice of a file
        - load_admitting_corpus: Strong-state lattices for MGE soundness checks
"""

# Local
from omlkit.pipeline.batch import BatchRunner, load_admitting_corpus
from omlkit.pipeline.observer import BatchEvent, BatchObserver, EventType, Observable
from omlkit.pipeline.observers import LogObserver, MetricsObserver, ProgressBarObserver

__all__ = [
    # Observer pattern
    "EventType",
    "BatchEvent",
    "BatchObserver",
    "Observable",
    "LogObserver",
    "ProgressBarObserver",
    "MetricsObserver",
    # Orchestration
    "BatchRunner",
    "load_admitting_corpus",
]
