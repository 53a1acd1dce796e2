"""Law verification report models."""

# Standard library
from typing import Annotated

# Third-party
from pydantic import ConfigDict, Field

# Local
from omlkit.models.base import OmlBaseModel


class LawCheck(OmlBaseModel):
    """Outcome of one exhaustively checked law.

    Attributes:
        law: Law name (e.g. ``"meet associativity"``).
        passed: Whether the law holds for every element tuple.
        counterexample: Labels of the first violating tuple in index order.
    """

    model_config = ConfigDict(frozen=True)

    law: Annotated[str, Field(description="Law name")]
    passed: Annotated[bool, Field(description="Whether the law holds everywhere")]
    counterexample: Annotated[
        tuple[str, ...] | None,
        Field(default=None, description="Labels of the first violating tuple")
    ] = None


class LawReport(OmlBaseModel):
    """All law checks run on one lattice."""

    model_config = ConfigDict(frozen=True)

    element_count: Annotated[int, Field(ge=1, description="Number of lattice elements")]
    checks: Annotated[tuple[LawCheck, ...], Field(description="Checks in evaluation order")]

    @property
    def passed(self) -> bool:
        """True when every law holds."""
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> tuple[LawCheck, ...]:
        """Failed checks in evaluation order."""
        return tuple(check for check in self.checks if not check.passed)

    def check(self, law: str) -> LawCheck:
        """Return the check for a law by name.

        Raises:
            KeyError: If the law was not checked.
        """
        for check in self.checks:
            if check.law == law:
                return check

        raise KeyError(law)
