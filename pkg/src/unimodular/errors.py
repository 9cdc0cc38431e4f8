"""Exception hierarchy shared by every module of the package."""


class UnimodularError(Exception):
    """Base class for all errors raised by this package."""


class InvalidCoefficients(UnimodularError, ValueError):
    pass


class NotUnimodular(InvalidCoefficients):
    """The coefficients have a common divisor other than 1."""


class TooShort(InvalidCoefficients):
    """Fewer than two coefficients were supplied."""


class Unsolvable(UnimodularError, ValueError):
    """A linear congruence has no solution."""


class NonIntegralSolution(UnimodularError, ArithmeticError):
    """An exact solve produced a non-integral (or inconsistent) answer."""


class ContainmentViolation(UnimodularError, ValueError):
    """A generator of the small module is not in the big module."""


class BudgetExceeded(UnimodularError, RuntimeError):
    pass


class InvariantViolation(UnimodularError, AssertionError):
    """An internal cross-check disagreed; indicates a bug, never bad input."""


class BasisRejected(UnimodularError, ValueError):
    """A candidate basis failed certification.

    ``reason`` is one of ``"count"``, ``"membership"``, ``"determinant"``.
    """

    def __init__(self, reason, message):
        super().__init__(message)
        self.reason = reason


class VerificationFailed(UnimodularError, AssertionError):
    """A presentation failed verification.

    ``failed`` lists the failing parts: ``"relations"`` (some column does not
    annihilate the generators) and/or ``"smith"`` (wrong rank or a
    non-unit invariant factor).  ``report`` carries the full report.
    """

    def __init__(self, failed, report, message):
        super().__init__(message)
        self.failed = tuple(failed)
        self.report = report
