"""Exception hierarchy.

Errors that signal bad mathematical input (``MathError`` subclasses) are kept
apart from usage errors so the CLI can map them to distinct exit codes.
"""


class PlaneFormError(Exception):
    """Base class for all errors raised by this package."""


class ArgumentError(PlaneFormError, ValueError):
    pass


class PartitionError(ArgumentError):
    pass


class ArityError(ArgumentError):
    pass


class ParseError(ArgumentError):
    pass


class MathError(PlaneFormError):
    """Input is well formed but the requested computation is impossible."""

    hint = ""


class DegreeError(MathError):
    pass


class IrreducibleError(MathError):
    hint = "the polynomial has roots outside Q(i); rerun with --mode numeric"


class ClusterAmbiguityError(MathError):
    hint = "roots sit between tol and 2*tol apart; choose a different --tol"


class SpectrumError(MathError):
    hint = "supplied eigenvalues do not match the matrix; check multiplicities"


class InternalInvariantError(PlaneFormError, AssertionError):
    """A structural check that should always hold failed (a bug, not bad input)."""
