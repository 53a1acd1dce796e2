"""Static constants and enumerations for the toolkit."""

# Standard library
from enum import Enum, IntEnum

# Atom characters of the compact Greechie notation: 1-9, then A-Z, then a-z
ATOM_ALPHABET = "123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz"
MAX_ATOMS = len(ATOM_ALPHABET)

SUPPORTED_BLOCK_SIZES: frozenset[int] = frozenset({3, 4})

DIAGRAM_COMMENT_PREFIX = "#"

# Variable names for generated equations ("v" is the join operator)
VARIABLE_NAMES = "abcdefghijklmnopqrstuwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"

# Element labels
ZERO_LABEL = "0"
ONE_LABEL = "I"

# Fixed element indices in every lattice table
ZERO_INDEX = 0
ONE_INDEX = 1


class ElementKind(str, Enum):
    """Kinds of elements in a pasted lattice."""

    ZERO = "zero"
    ONE = "one"
    ATOM = "atom"
    COATOM = "coatom"  # complement of an atom
    BLOCK_JOIN = "block_join"  # proper join inside a 4-block
    GENERIC = "generic"  # element of a lattice given by its order


class Relation(str, Enum):
    """Relations between the two sides of an equation or constraint."""

    EQ = "="
    LE = "=<"


class Operator(str, Enum):
    """Binary term operators of the equation language."""

    MEET = "^"
    JOIN = "v"
    IMP = "->"  # Sasaki implication


class Subcommand(str, Enum):
    """Batch subcommands of the command-line interface."""

    PARSE = "parse"
    LAWS = "laws"
    CHECK = "check"
    NGO = "ngo"
    STATES = "states"
    LP_DUMP = "lp-dump"
    MGE = "mge"


class ExitCode(IntEnum):
    """Process exit statuses."""

    OK = 0
    INPUT_ERROR = 1
    INTERNAL_ERROR = 2
