"""Exceptions raised by stairtab.

Each class also derives from the builtin a caller would naturally catch, so
``except ValueError`` keeps working around precondition checks.
"""


class StairtabError(Exception):
    """Base class for every error raised on purpose by this package."""


class PreconditionError(StairtabError, ValueError):
    """An operation was called outside its documented domain."""


class UsageError(StairtabError, ValueError):
    """Invalid parameters: mixed alphabets, bad CLI flags, bad verify params."""


class CoefficientOverflow(StairtabError, ArithmeticError):
    """A polynomial coefficient left the native 64-bit range."""


class ExpansionError(StairtabError, ArithmeticError):
    """A polynomial could not be expanded in the Schur basis."""


class InvariantViolation(StairtabError, RuntimeError):
    """An internal invariant failed; indicates a bug or an invalid input tableau."""
