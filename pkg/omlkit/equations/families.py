"""Generators for the named equation families.

Variables are single letters ``a, b, c, ...`` (skipping ``v``) so that the
generated equations print in the parser's syntax; chains longer than the
alphabet fall back to ``x1, x2, ...`` names, which print but do not parse.
"""

# Local
from omlkit.config.constants import VARIABLE_NAMES, Relation
from omlkit.models.equation import Equation, Hypothesis, Term, compl, imp, join, meet, var


def chain_variables(n: int) -> tuple[str, ...]:
    """Names of the variables a1..an of an n-element chain."""
    if n <= len(VARIABLE_NAMES):
        return tuple(VARIABLE_NAMES[:n])

    return tuple(f"x{i}" for i in range(1, n + 1))


def _check_order(n: int) -> None:
    if n < 3:
        raise ValueError(f"n-Go is defined for n >= 3, got {n}")


def godowski_identity(names: tuple[str, ...]) -> Term:
    """Cyclic implication chain ``(a1 -> a2) ^ ... ^ (an-1 -> an) ^ (an -> a1)``."""
    steps = [imp(var(left), var(right)) for left, right in zip(names, names[1:], strict=False)]
    steps.append(imp(var(names[-1]), var(names[0])))
    return meet(*steps)


def generate_ngo(n: int) -> Equation:
    """n-Go in identity form: the cyclic chain read forward equals it read backward.

    Args:
        n: Chain length, at least 3.

    Returns:
        Equation with n variables and n implication conjuncts per side.

    Raises:
        ValueError: If n < 3.

    Examples:
        >>> format_equation(generate_ngo(3))
        '(a -> b) ^ (b -> c) ^ (c -> a) = (c -> b) ^ (b -> a) ^ (a -> c)'
    """
    _check_order(n)
    names = chain_variables(n)
    return Equation.create(
        godowski_identity(names),
        Relation.EQ,
        godowski_identity(tuple(reversed(names))),
        variables=names,
    )


def generate_ngo_implicational(n: int) -> Equation:
    """n-Go in implicational form: ``(a1 -> a2) ^ ... ^ (an -> a1) =< a1 -> an``.

    Raises:
        ValueError: If n < 3.
    """
    _check_order(n)
    names = chain_variables(n)
    return Equation.create(
        godowski_identity(names),
        Relation.LE,
        imp(var(names[0]), var(names[-1])),
        variables=names,
    )


def mayet_e2_condition() -> Equation:
    """Condition holding in every OML, over four variables.

    With ``a _|_ b``, ``c _|_ d`` and ``a _|_ c``:
    ``(a v b) ^ (c v d) =< b v d v (a v c)'``.
    """
    a, b, c, d = (var(name) for name in "abcd")
    return Equation.create(
        meet(join(a, b), join(c, d)),
        Relation.LE,
        join(b, d, compl(join(a, c))),
        hypotheses=(
            Hypothesis(left="a", right="b"),
            Hypothesis(left="c", right="d"),
            Hypothesis(left="a", right="c"),
        ),
    )
