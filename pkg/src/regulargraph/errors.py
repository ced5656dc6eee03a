"""Exception hierarchy shared by every module."""


class RegularGraphError(Exception):
    """Base class; ``token`` is the machine-readable name used by the CLI."""

    token = "RegularGraphError"


class DomainError(RegularGraphError, ValueError):
    token = "DomainError"


class NotRepresentable(RegularGraphError, ValueError):
    """Raised when a requested configuration provably does not exist."""

    token = "NotRepresentable"


class NumericalError(RegularGraphError, ArithmeticError):
    token = "NumericalError"


class NoSignChange(NumericalError):
    token = "NoSignChange"


class NonFinite(NumericalError):
    token = "NonFinite"


class ConvergenceError(NumericalError):
    token = "ConvergenceError"
