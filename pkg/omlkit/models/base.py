"""Base model class with shared configuration and utilities."""

# Standard library
from fractions import Fraction
from typing import Annotated, Any

# Third-party
from pydantic import BaseModel, BeforeValidator, ConfigDict, PlainSerializer


def _to_fraction(value: Any) -> Any:
    """Coerce ints, decimal strings and ``"p/q"`` strings to Fraction."""
    if isinstance(value, Fraction):
        return value

    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")

    if isinstance(value, int | str):
        return Fraction(value)

    return value


Rational = Annotated[
    Fraction,
    BeforeValidator(_to_fraction),
    PlainSerializer(lambda value: str(value), return_type=str, when_used="json"),
]
"""Exact rational number, serialized to JSON as ``"p/q"`` (or ``"p"``)."""


class OmlBaseModel(BaseModel):
    """Base model for all toolkit records.

    All models in ``omlkit.models`` inherit from it so that verdicts,
    problems and equations share validation and JSON behavior.

    Examples:
        >>> class Count(OmlBaseModel):
        ...     name: str
        ...     value: Rational
        >>> Count(name="m", value="1/3").model_dump_json()
        '{"name":"m","value":"1/3"}'
    """

    model_config = ConfigDict(
        populate_by_name=True,
        validate_assignment=True,
        arbitrary_types_allowed=True,  # fractions.Fraction
    )
