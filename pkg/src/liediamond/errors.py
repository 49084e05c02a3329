"""Exception hierarchy.

``FormatError`` (malformed input) lives in :mod:`liediamond.exactmath` and is
re-exported here.  Everything deriving from :class:`PreconditionError` is a
mathematical precondition failure; the command line maps those to exit
status 2 and everything else to exit status 1.
"""
from .exactmath import FormatError


class AxiomViolationError(ValueError):
    """Structure constants break grading, super-antisymmetry or super-Jacobi."""

    def __init__(self, violation):
        self.violation = violation
        super().__init__(str(violation))


class PreconditionError(ValueError):
    """A mathematical precondition of an operation does not hold."""


class NotNilpotentError(PreconditionError):
    """The operation is only defined (or only proved) for nilpotent input."""


class WitnessSearchError(PreconditionError):
    """No rational witness was found although the theory says one exists."""


__all__ = [
    "FormatError",
    "AxiomViolationError",
    "PreconditionError",
    "NotNilpotentError",
    "WitnessSearchError",
]
