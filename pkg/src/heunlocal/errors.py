"""Exception hierarchy shared by all computation paths."""


class HeunError(Exception):
    """Base class; ``reason`` is a short machine-parsable code."""

    reason = "heun-error"


class InvalidParameterError(HeunError, ValueError):
    reason = "invalid-parameter"


class UnsupportedParameterError(HeunError, ValueError):
    reason = "unsupported-parameter"


class ModeError(HeunError, TypeError):
    """Values of different arithmetic modes were mixed."""

    reason = "mode-mismatch"


class ZeroDenominatorError(HeunError, ZeroDivisionError):
    reason = "zero-denominator"


class NotApplicableError(HeunError):
    """A method or estimate does not cover the given parameters."""

    reason = "not-applicable"


class DomainError(HeunError, ValueError):
    reason = "domain"


class ConvergenceError(HeunError, ArithmeticError):
    reason = "non-convergence"
