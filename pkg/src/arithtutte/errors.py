"""Exception hierarchy shared by every module."""


class ArithTutteError(Exception):
    """Base class for all errors raised by this package."""


class ArgumentError(ArithTutteError, ValueError):
    """A caller passed malformed or inconsistent arguments."""


class DomainError(ArithTutteError, ArithmeticError):
    """Evaluation outside the domain of a Laurent polynomial (e.g. 0 to a negative power)."""


class UnsupportedError(ArithTutteError):
    """The request is well-formed but outside what this implementation supports."""


class PreconditionError(ArithTutteError):
    """An input violates a structural precondition (not a matroid, non-integral multiplicity, ...)."""


class ResourceError(ArithTutteError):
    """A size cap (power-set size, enumeration budget) would be exceeded."""
