"""Exception hierarchy.

Every error raised on purpose by this package derives from TstarError, so
callers (and the CLI) can distinguish "the check failed" (a FAIL report)
from "the computation could not be carried out" (an exception).
"""


class TstarError(Exception):
    """Base class for all package-specific errors."""


class CapacityError(TstarError):
    """A configured resource ceiling was exceeded.

    Raised for digit requests beyond the supported ceiling, brute-force
    enumeration beyond its guard rails, exact-rational streaming past its
    cap, and Euler-number indices past the table limit.
    """


class PrecisionError(TstarError):
    """The precision context is too coarse for the requested computation.

    The accumulated-rounding model predicts noise above the target error,
    so proceeding would produce numbers whose stated bounds are not honest.
    """


class ConsistencyError(TstarError):
    """Two independent evaluation routes disagreed beyond their joint bound.

    This is always a bug somewhere (or broken hardware); it must never be
    silenced by widening a tolerance.
    """


class ExtrapolationError(TstarError):
    """Sequence extrapolation failed to converge.

    Carries the stage-difference diagnostics so the failure mode can be
    inspected.
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = tuple(diagnostics or ())


class QuadratureError(TstarError):
    """Numerical integration failed (NaN from the integrand, or the level
    budget was exhausted before the inter-level differences converged)."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = tuple(diagnostics or ())
