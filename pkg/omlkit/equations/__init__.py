"""Lattice equations: textual syntax, named families and exhaustive checking."""

# Local
from omlkit.equations.checker import check_equation, compile_term, evaluate_at
from omlkit.equations.dsl import format_equation, format_term, parse_equation
from omlkit.equations.families import (
    generate_ngo,
    generate_ngo_implicational,
    godowski_identity,
    mayet_e2_condition,
)

__all__ = [
    "check_equation",
    "compile_term",
    "evaluate_at",
    "format_equation",
    "format_term",
    "generate_ngo",
    "generate_ngo_implicational",
    "godowski_identity",
    "mayet_e2_condition",
    "parse_equation",
]
