"""Exception types shared across the package."""


class CharlierError(Exception):
    """Base class for all numerical errors raised by this package."""


class DomainError(CharlierError, ValueError):
    """Input lies outside the domain an operation is defined on."""


class ConvergenceError(CharlierError, RuntimeError):
    """A series or iteration exceeded its term budget before converging."""


class SingularityError(CharlierError, ZeroDivisionError):
    """Evaluation requested exactly at a pole (a turning point)."""


class ZeroCountError(CharlierError, RuntimeError):
    """A sign-change scan did not isolate the expected number of roots."""


class BracketError(CharlierError, RuntimeError):
    """Endpoint values do not straddle zero, so bisection cannot start."""


class PairingError(CharlierError, RuntimeError):
    """Approximate and exact zeros could not be matched one-to-one."""
