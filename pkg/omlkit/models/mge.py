"""Condensed state equations and generated Mayet-Godowski equations."""

# Standard library
from collections import Counter
from typing import Annotated, Self

# Third-party
from pydantic import ConfigDict, Field, model_validator

# Local
from omlkit.models.base import OmlBaseModel
from omlkit.models.diagram import atom_char
from omlkit.models.equation import CheckVerdict, Equation
from omlkit.models.lp import LpProblem
from omlkit.models.verdicts import WitnessPair

CondensedTerm = tuple[str, ...]


class CondensedStateEquation(OmlBaseModel):
    """Abbreviated MGE: terms of juxtaposed variables joined by ``+``.

    Attributes:
        lhs: Left-hand terms; each term lists variables (juxtaposition = join).
        rhs: Right-hand terms.
        naming: Atom number to variable, when built from a lattice.
        singletons: Right-hand terms reduced to one variable during construction.

    Examples:
        >>> c = CondensedStateEquation(lhs=(("a", "d"),), rhs=(("d", "a"),))
        >>> c.render()
        'ad=da'
    """

    model_config = ConfigDict(frozen=True)

    lhs: Annotated[tuple[CondensedTerm, ...], Field(min_length=1)]
    rhs: Annotated[tuple[CondensedTerm, ...], Field(min_length=1)]
    naming: Annotated[dict[int, str], Field(default_factory=dict)]
    singletons: Annotated[tuple[CondensedTerm, ...], Field(default=())] = ()

    @model_validator(mode="after")
    def _check_terms(self) -> Self:
        """Terms are nonempty and do not repeat a variable."""
        for term in (*self.lhs, *self.rhs):
            if not term:
                raise ValueError("empty condensed term")

            if len(set(term)) != len(term):
                raise ValueError(f"term {''.join(term)} repeats a variable")

        return self

    def variable_counts(self) -> tuple[Counter[str], Counter[str]]:
        """Occurrences of each variable on the left and right sides."""
        left = Counter(name for term in self.lhs for name in term)
        right = Counter(name for term in self.rhs for name in term)
        return left, right

    @property
    def is_balanced(self) -> bool:
        """Equal variable counts across sides and equal term counts."""
        left, right = self.variable_counts()
        return left == right and len(self.lhs) == len(self.rhs)

    @property
    def variables(self) -> tuple[str, ...]:
        """Variables in first-occurrence order (lhs, then rhs)."""
        names = [name for term in (*self.lhs, *self.rhs) for name in term]
        return tuple(dict.fromkeys(names))

    def render(self) -> str:
        """Render as ``ab+cd=bg+fc``."""
        return "+".join("".join(term) for term in self.lhs) + "=" + "+".join("".join(term) for term in self.rhs)

    def render_atoms(self) -> str:
        """Render with atom characters in place of variables (``45+9A=...``).

        Raises:
            ValueError: If the equation carries no atom naming.
        """
        if not self.naming:
            raise ValueError("condensed equation has no atom naming")

        to_atom = {name: atom_char(atom) for atom, name in self.naming.items()}

        def side(terms: tuple[CondensedTerm, ...]) -> str:
            return "+".join("".join(to_atom[name] for name in term) for term in terms)

        return f"{side(self.lhs)}={side(self.rhs)}"


class MgeResult(OmlBaseModel):
    """Everything produced when synthesizing an MGE from one lattice.

    Attributes:
        source: Identifier of the source lattice (``L<line>`` or the diagram text).
        pair: Witness pair the construction started from.
        weakened: Blocks relaxed to ``<= 1``, compact notation, input order.
        kept: Blocks kept at ``= 1``.
        final_problem: The weakened LP, still solving to 1.
        condensed: Balanced condensed state equation.
        mge: Full equation with orthogonality hypotheses.
        witness_assignment: Variable to atom label falsifying the MGE on the source.
        corpus_checks: Verdict of the MGE on each strong-state corpus lattice.
    """

    model_config = ConfigDict(frozen=True)

    source: str
    pair: WitnessPair
    weakened: tuple[str, ...]
    kept: tuple[str, ...]
    final_problem: LpProblem
    condensed: CondensedStateEquation
    mge: Equation
    witness_assignment: dict[str, str]
    corpus_checks: Annotated[dict[str, CheckVerdict], Field(default_factory=dict)]
