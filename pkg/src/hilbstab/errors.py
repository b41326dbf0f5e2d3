"""Shared exception types.

Everything raised on purpose by this package derives from HilbstabError,
so callers can catch one base class. The CLI maps the subclasses onto
exit codes (validation 1, inapplicable 2, horizon shortfall 3).
"""

from __future__ import annotations


class HilbstabError(Exception):
    """Base class for all errors raised by hilbstab."""


class ValidationError(HilbstabError, ValueError):
    """Malformed or inconsistent input data.

    ``path`` locates the offending field in a spec document, when known.
    """

    def __init__(self, message: str, path: str | None = None):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class ParityError(HilbstabError, ValueError):
    """Intersection numbers with impossible parity.

    On a smooth projective surface D.D + D.K is even for every divisor D,
    so a half-integer showing up in a count means the input data is not
    realizable. We refuse to round.
    """


class MethodInapplicableError(HilbstabError, ValueError):
    """The requested pipeline has nothing to say about this input."""


class HorizonError(HilbstabError, ValueError):
    """The computation horizon is too small to certify the result."""


class PeriodicityError(HorizonError):
    """No certified eventually-periodic structure within the horizon.

    Carries the best candidate seen so the caller can report how far
    the horizon would need to grow.
    """

    def __init__(self, message: str, n0: int | None = None, period: int | None = None):
        self.n0 = n0
        self.period = period
        super().__init__(message)
