"""Exception hierarchy; each class carries the CLI exit code it maps to."""


class SkewqError(Exception):
    exit_code = 1


class InputError(SkewqError, ValueError):
    """Malformed input or a violated precondition."""

    exit_code = 2


class InvariantViolation(SkewqError, AssertionError):
    """An internal cross-check failed; the computed result is not trustworthy."""

    exit_code = 3


class BudgetExceeded(SkewqError):
    """A search or size budget ran out before an answer was found."""

    exit_code = 4
