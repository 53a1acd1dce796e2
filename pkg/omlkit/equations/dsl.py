"""Textual equation language: Lark grammar, parser and printer.

Syntax::

    a _|_ b & c _|_ d |= (a v b) ^ (c v d) =< (b v d) v (a v c)'

Precedence from tightest: ``'`` (postfix complement), ``^``, ``v``, ``->``
(Sasaki implication, right associative). Variables are single letters other
than ``v``; ``0`` and ``1`` are the lattice bounds. A hypothesis chain
``a _|_ d _|_ b`` stands for ``a _|_ d & d _|_ b``.
"""

# Standard library
from functools import lru_cache

# Third-party
from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedInput, UnexpectedToken

# Local
from omlkit.config.constants import Operator, Relation
from omlkit.errors import EquationSyntaxError, ReservedVariableError
from omlkit.models.equation import BinaryTerm, Complement, Const, Equation, Hypothesis, Term, Var

EQUATION_GRAMMAR = r"""
    ?start: equation

    equation: (hypotheses "|=")? relation

    hypotheses: chain ("&" chain)*
    chain: VAR (_ORTHO VAR)+

    relation: expr RELOP expr

    ?expr: join_expr
         | join_expr "->" expr          -> imp

    ?join_expr: meet_expr
              | join_expr "v" meet_expr -> join

    ?meet_expr: postfix
              | meet_expr "^" postfix   -> meet

    ?postfix: primary
            | postfix "'"               -> complement

    ?primary: VAR                       -> var
            | CONST                     -> const
            | "(" expr ")"

    RELOP: "=<" | "="
    _ORTHO: "_|_"
    VAR: /[a-uw-zA-Z]/
    CONST: "0" | "1"

    %import common.WS
    %ignore WS
"""

RELATION_TEXT = {Relation.EQ: "=", Relation.LE: "=<"}

# Binding strength used by the printer
_PRECEDENCE = {Operator.IMP: 1, Operator.JOIN: 2, Operator.MEET: 3}
_COMPLEMENT_PRECEDENCE = 4
_ATOM_PRECEDENCE = 5


@lru_cache(maxsize=1)
def _parser() -> Lark:
    """Shared LALR parser instance."""
    return Lark(EQUATION_GRAMMAR, parser="lalr", maybe_placeholders=False)


@v_args(inline=True)
class _EquationBuilder(Transformer):
    """Turns the parse tree into equation models."""

    def var(self, token: Token) -> Var:
        return Var(name=str(token))

    def const(self, token: Token) -> Const:
        return Const(value=int(token))

    def complement(self, operand: Term) -> Complement:
        return Complement(operand=operand)

    def meet(self, left: Term, right: Term) -> BinaryTerm:
        return BinaryTerm(op=Operator.MEET, left=left, right=right)

    def join(self, left: Term, right: Term) -> BinaryTerm:
        return BinaryTerm(op=Operator.JOIN, left=left, right=right)

    def imp(self, left: Term, right: Term) -> BinaryTerm:
        return BinaryTerm(op=Operator.IMP, left=left, right=right)

    def chain(self, *names: Token) -> list[Hypothesis]:
        return [Hypothesis(left=str(a), right=str(b)) for a, b in zip(names, names[1:], strict=False)]

    def hypotheses(self, *chains: list[Hypothesis]) -> list[Hypothesis]:
        return [hypothesis for chain in chains for hypothesis in chain]

    def relation(self, lhs: Term, relop: Token, rhs: Term) -> tuple[Term, Relation, Term]:
        return lhs, Relation(str(relop)), rhs

    def equation(self, *parts: object) -> Equation:
        *hypotheses, (lhs, relation, rhs) = parts
        return Equation.create(lhs, relation, rhs, hypotheses=hypotheses[0] if hypotheses else ())


def parse_equation(text: str) -> Equation:
    """Parse equation text into an AST.

    Args:
        text: Equation in the toolkit's syntax.

    Returns:
        Equation with variables in first-appearance order.

    Raises:
        ReservedVariableError: If ``v`` is used where a variable is expected.
        EquationSyntaxError: On any other syntax error; carries the column.

    Examples:
        >>> parse_equation("a ^ (a' v b) =< b").variables
        ('a', 'b')
    """
    try:
        tree = _parser().parse(text)

    except UnexpectedToken as error:
        column = error.column if isinstance(error.column, int) and error.column > 0 else None
        if error.token == "v" and "VAR" in error.expected:
            raise ReservedVariableError("'v' is the join operator and cannot name a variable", column) from error

        found = "end of input" if error.token.type == "$END" else repr(str(error.token))
        raise EquationSyntaxError(f"unexpected {found}", column) from error

    except UnexpectedCharacters as error:
        raise EquationSyntaxError(f"unexpected character {text[error.pos_in_stream]!r}", error.column) from error

    except UnexpectedInput as error:
        raise EquationSyntaxError("incomplete equation", getattr(error, "column", None)) from error

    return _EquationBuilder().transform(tree)


# ============================================================================
# Printer
# ============================================================================


def _precedence(term: Term) -> int:
    match term:
        case BinaryTerm(op=op):
            return _PRECEDENCE[op]
        case Complement():
            return _COMPLEMENT_PRECEDENCE
        case _:
            return _ATOM_PRECEDENCE


def format_term(term: Term) -> str:
    """Render a term with the minimum parentheses needed to parse back.

    Examples:
        >>> format_term(parse_equation("(a v b)' = a").lhs)
        "(a v b)'"
    """
    match term:
        case Var(name=name):
            return name
        case Const(value=value):
            return str(value)
        case Complement(operand=operand):
            inner = format_term(operand)
            return f"{inner}'" if _precedence(operand) >= _COMPLEMENT_PRECEDENCE else f"({inner})'"
        case BinaryTerm(op=op, left=left, right=right):
            own = _PRECEDENCE[op]
            # meet and join nest to the left, implication to the right
            left_needs = _precedence(left) < own or (op is Operator.IMP and _precedence(left) == own)
            right_needs = _precedence(right) < own or (op is not Operator.IMP and _precedence(right) == own)
            left_text = f"({format_term(left)})" if left_needs else format_term(left)
            right_text = f"({format_term(right)})" if right_needs else format_term(right)
            return f"{left_text} {op.value} {right_text}"

    raise TypeError(f"Unknown term {term!r}")


def format_equation(equation: Equation) -> str:
    """Render an equation in the parser's syntax.

    Hypotheses are printed pairwise (``a _|_ b & b _|_ c``).
    """
    relation = f"{format_term(equation.lhs)} {RELATION_TEXT[equation.relation]} {format_term(equation.rhs)}"
    if not equation.hypotheses:
        return relation

    hypotheses = " & ".join(f"{h.left} _|_ {h.right}" for h in equation.hypotheses)
    return f"{hypotheses} |= {relation}"
