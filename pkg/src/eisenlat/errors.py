"""Typed errors shared across the package.

Every domain failure raises a subclass of EisenlatError so callers (and the
CLI) can distinguish bad mathematics from bad input.
"""


class EisenlatError(Exception):
    """Base class for all library errors."""


# --- lattice construction / arithmetic ---

class NotSymmetric(EisenlatError):
    """Gram matrix is not square-symmetric."""


class NotEven(EisenlatError):
    """Gram matrix has an odd diagonal entry."""


class UnknownName(EisenlatError):
    """Unrecognised standard lattice or isometry name."""


class ZeroScale(EisenlatError):
    """twist() called with scale 0."""


class NonIntegralScale(EisenlatError):
    """p * G^-1 is not an even integral matrix."""


class DegenerateForm(EisenlatError):
    """Operation needs a nondegenerate Gram matrix."""


class GroupTooLarge(EisenlatError):
    """Discriminant group exceeds the tabulation cap."""


class DependentInput(EisenlatError):
    """Supplied vectors are linearly dependent."""


class IndefiniteLattice(EisenlatError):
    """Vector enumeration needs a definite lattice."""


class BudgetExceeded(EisenlatError):
    """A search or enumeration hit its configured budget."""


# --- isometries ---

class RankMismatch(EisenlatError):
    """Matrix size does not match the lattice rank."""


class InvalidIsometry(EisenlatError):
    """Matrix does not preserve the Gram form."""


class WrongOrder(EisenlatError):
    """Isometry does not have the order required here."""


class NotFound(EisenlatError):
    """Exhaustive search finished without a solution."""


class HasFixedVectors(EisenlatError):
    """Isometry is not fixed-point free."""


class OddRank(EisenlatError):
    """Lattice rank is odd; no module structure exists."""


# --- classification / fibration ---

class NotInTable(EisenlatError):
    """(n, k) is not an admissible fixed-locus type."""


class OutsideFamily(EisenlatError):
    """Root multiplicity outside the {1,2,4,5} dictionary."""


class UnsupportedType(EisenlatError):
    """Kodaira fiber type without fixed-curve data."""


class DegenerateSection(EisenlatError):
    """Multiplicity profile has no irreducible double section."""


class NegativeGenus(EisenlatError):
    """Branch count below 2; the double section degenerates."""


# --- I/O ---

class ParseError(EisenlatError):
    """Malformed input file; carries line/column information."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)
