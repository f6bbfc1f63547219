"""Exception types shared by every module."""


class DualHahnError(Exception):
    """Base class for library errors."""


class DomainError(DualHahnError, ValueError):
    """An argument lies outside the domain an operation supports."""


class PoleError(DomainError):
    """A gamma-function argument sits on (or within tolerance of) a pole."""


class NoConvergence(DualHahnError, ArithmeticError):
    """An iterative procedure exhausted its budget before reaching tolerance."""
