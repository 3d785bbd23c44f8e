"""Exception hierarchy shared by every module."""


class PolylogError(Exception):
    """Base class for all errors raised by genpolylog."""


class DivisionByZero(PolylogError, ZeroDivisionError):
    pass


class BadArgument(PolylogError, ValueError):
    pass


class UnsupportedOrder(BadArgument):
    """A root of unity of the requested order does not live in F_p."""


class PoleError(PolylogError, ZeroDivisionError):
    """Specialization or substitution hit a zero of the denominator."""

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class InternalInconsistency(PolylogError, RuntimeError):
    """Two independent constructions of the same object disagree."""


class DegreeGuardError(PolylogError, RuntimeError):
    """A bivariate fraction grew past the configured total-degree cap."""
