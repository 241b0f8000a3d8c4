"""Exception hierarchy.

Every error a caller can reasonably branch on gets its own class; all inherit
from NgwpError so `except NgwpError` catches anything this package raises on
purpose. DomainError doubles as a ValueError so sloppy call sites that only
catch ValueError still work.
"""


class NgwpError(Exception):
    """Base class for all errors raised deliberately by this package."""


class DomainError(NgwpError, ValueError):
    """Argument outside the mathematical domain of the operation."""


class PoleError(NgwpError, ArithmeticError):
    """Evaluation requested at (or numerically on top of) a pole."""


class RotationInvalidError(NgwpError):
    """A contour rotation would sweep past a singularity of the integrand."""


class DivergenceError(NgwpError):
    """No decay detected: the integral or series shows no sign of converging."""


class ContourError(NgwpError):
    """An inversion contour produced non-finite image values (shift too small?)."""


class UnknownIdentityError(NgwpError, KeyError):
    """Identity id not in the catalog."""


class ConvergenceError(NgwpError):
    """Quadrature hit its evaluation budget before meeting the tolerance.

    Carries the best estimate so far in `.result` (a QuadResult) — callers who
    can live with the achieved error may use it.
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result
