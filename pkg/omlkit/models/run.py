"""Run configuration and per-lattice report models for batch runs."""

# Standard library
import json
from enum import Enum
from pathlib import Path
from typing import Annotated, Any, Self

# Third-party
from pydantic import ConfigDict, Field, model_validator

# Local
from omlkit.config.constants import Subcommand
from omlkit.models.base import OmlBaseModel

# Flags accepted per subcommand (besides the shared input/json/workers/no-verify)
_SUBCOMMAND_FLAGS: dict[Subcommand, frozenset[str]] = {
    Subcommand.PARSE: frozenset(),
    Subcommand.LAWS: frozenset(),
    Subcommand.CHECK: frozenset({"equation", "var_cap"}),
    Subcommand.NGO: frozenset({"cutoff"}),
    Subcommand.STATES: frozenset({"all_pairs"}),
    Subcommand.LP_DUMP: frozenset({"pair"}),
    Subcommand.MGE: frozenset({"seed_order", "corpus"}),
}


class RunConfig(OmlBaseModel):
    """Options of one batch run.

    Attributes:
        subcommand: Analysis to run on every lattice.
        input_path: Diagram file.
        equation: Equation text (``check``).
        cutoff: Largest n tested (``ngo``).
        var_cap: Brute-force variable cap (``check``).
        verify: Verify lattice laws while building.
        all_pairs: Keep scanning after the first refuting pair (``states``).
        json_output: Emit JSON lines instead of text.
        pair: Element labels for ``lp-dump``.
        seed_order: Shuffle seed for the relaxation order (``mge``).
        corpus: Strong-state lattices to check generated MGEs on (``mge``).
        workers: Batch worker pool size.
        lenient: Skip malformed diagram lines with a warning.
    """

    model_config = ConfigDict(frozen=True)

    subcommand: Subcommand
    input_path: Path
    equation: Annotated[str | None, Field(default=None)] = None
    cutoff: Annotated[int, Field(default=100, ge=3)] = 100
    var_cap: Annotated[int, Field(default=10, ge=1)] = 10
    verify: bool = True
    all_pairs: bool = False
    json_output: bool = False
    pair: Annotated[tuple[str, str] | None, Field(default=None)] = None
    seed_order: Annotated[int | None, Field(default=None)] = None
    corpus: Annotated[Path | None, Field(default=None)] = None
    workers: Annotated[int, Field(default=4, ge=1, le=64)] = 4
    lenient: bool = False

    @model_validator(mode="after")
    def _check_subcommand_flags(self) -> Self:
        """Subcommand-specific flags must not be set for other subcommands."""
        allowed = _SUBCOMMAND_FLAGS[self.subcommand]
        explicit = {name for name in self.model_fields_set if name in _flag_names()}
        stray = sorted(explicit - allowed)
        if stray:
            raise ValueError(f"Options {stray} do not apply to '{self.subcommand.value}'")

        if self.subcommand is Subcommand.CHECK and not self.equation:
            raise ValueError("'check' needs an equation")

        if self.subcommand is Subcommand.LP_DUMP and self.pair is None:
            raise ValueError("'lp-dump' needs a pair")

        return self


def _flag_names() -> frozenset[str]:
    return frozenset().union(*_SUBCOMMAND_FLAGS.values())


class ReportStatus(str, Enum):
    """Per-lattice processing status."""

    OK = "ok"
    REJECTED = "rejected"


class LatticeReport(OmlBaseModel):
    """Result of one analysis on one lattice.

    ``fields`` holds exactly what the text line shows; JSON mode writes
    ``{"line": ..., **fields}``.

    Attributes:
        line: Source line of the diagram.
        status: ok, or rejected when the pasting is not an OML.
        summary: Text after ``L<line>: ``.
        details: Extra lines printed after the verdict (listings, tables).
        fields: Machine-readable verdict fields.
    """

    model_config = ConfigDict(frozen=True)

    line: Annotated[int, Field(ge=1)]
    status: ReportStatus = ReportStatus.OK
    summary: str
    details: Annotated[tuple[str, ...], Field(default=())] = ()
    fields: Annotated[dict[str, Any], Field(default_factory=dict)]

    @property
    def key(self) -> str:
        """Report key ``L<line>``."""
        return f"L{self.line}"

    def render_text(self) -> str:
        """Verdict line followed by any detail lines."""
        return "\n".join([f"{self.key}: {self.summary}", *self.details])

    def render_json(self) -> str:
        """One JSON line holding the line number and the verdict fields."""
        return json.dumps({"line": self.line, **self.fields}, ensure_ascii=False, separators=(",", ":"))
