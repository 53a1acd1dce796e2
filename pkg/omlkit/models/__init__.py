"""Data models for the orthomodular lattice toolkit.

Pydantic models for diagrams, lattice elements, equations, linear programs
and analysis verdicts. All models serialize to JSON lines for ``--json``.
"""

# Base model
from omlkit.models.base import OmlBaseModel, Rational

# Diagrams and elements
from omlkit.models.diagram import GreechieDiagram, atom_char, atom_number
from omlkit.models.element import ElementId

# Law reports
from omlkit.models.laws import LawCheck, LawReport

# Equations
from omlkit.models.equation import (
    BinaryTerm,
    CheckResult,
    CheckVerdict,
    Complement,
    Const,
    Equation,
    Hypothesis,
    Term,
    Var,
)

# Linear programs
from omlkit.models.lp import Constraint, LpOutcome, LpProblem, LpStatus

# Verdicts
from omlkit.models.verdicts import (
    NGoOutcome,
    NGoVerdict,
    StateOutcome,
    StateVector,
    StrongSetVerdict,
    WitnessKind,
    WitnessPair,
)

# Equation synthesis
from omlkit.models.mge import CondensedStateEquation, MgeResult

# Batch runs
from omlkit.models.run import LatticeReport, ReportStatus, RunConfig

__all__ = [
    # Base
    "OmlBaseModel",
    "Rational",
    # Diagrams
    "GreechieDiagram",
    "ElementId",
    "atom_char",
    "atom_number",
    # Laws
    "LawCheck",
    "LawReport",
    # Equations
    "BinaryTerm",
    "CheckResult",
    "CheckVerdict",
    "Complement",
    "Const",
    "Equation",
    "Hypothesis",
    "Term",
    "Var",
    # Linear programs
    "Constraint",
    "LpOutcome",
    "LpProblem",
    "LpStatus",
    # Verdicts
    "NGoOutcome",
    "NGoVerdict",
    "StateOutcome",
    "StateVector",
    "StrongSetVerdict",
    "WitnessKind",
    "WitnessPair",
    # Synthesis
    "CondensedStateEquation",
    "MgeResult",
    # Runs
    "LatticeReport",
    "ReportStatus",
    "RunConfig",
]
