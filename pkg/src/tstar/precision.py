"""Precision policy and error-bound tracking.

Everything numeric in this package runs on gmpy2's MPFR binding.  A
PrecisionContext fixes the working mantissa size and the absolute error
target; every routine that returns an approximate number returns a
BoundedValue carrying the value, an absolute error bound, and whether that
bound is rigorous or heuristic.

All values are immutable; nothing here mutates shared state, so any of these
objects can be used freely across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import gmpy2
from gmpy2 import mpfr

from .errors import CapacityError, PrecisionError

DIGIT_CEILING = 10_000
DEFAULT_GUARD_BITS = 32

RIGOROUS = "rigorous"
HEURISTIC = "heuristic"

_LOG2_10 = math.log2(10)


def _bits_for_target(target) -> int:
    # ceil(log2(1/target)) without float underflow for tiny targets
    with gmpy2.context(precision=64):
        return int(gmpy2.ceil(-gmpy2.log2(target)))


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision plus the absolute error target it must support.

    Invariant: working_bits >= ceil(log2(1/target_abs_error)) + guard_bits,
    so the guard bits are genuinely spare headroom above the target.
    """

    working_bits: int
    target_abs_error: mpfr
    guard_bits: int = DEFAULT_GUARD_BITS

    def __post_init__(self):
        if not (self.target_abs_error > 0 and gmpy2.is_finite(self.target_abs_error)):
            raise PrecisionError("target_abs_error must be finite and positive")
        needed = _bits_for_target(self.target_abs_error) + self.guard_bits
        if self.working_bits < needed:
            raise PrecisionError(
                f"working_bits={self.working_bits} below required {needed} "
                f"for target {self.target_abs_error}"
            )

    def activate(self, extra_bits: int = 0):
        """Context manager setting the ambient gmpy2 precision."""
        return gmpy2.context(precision=self.working_bits + extra_bits)

    @property
    def decimal_digits(self) -> int:
        """Approximate decimal digits the target corresponds to."""
        with gmpy2.context(precision=64):
            return int(round(float(-gmpy2.log10(self.target_abs_error))))


def make_context(decimal_digits: int, guard_bits: int = DEFAULT_GUARD_BITS) -> PrecisionContext:
    """Build a context targeting an absolute error of 10**-decimal_digits.

    Digit requests outside 1..DIGIT_CEILING raise CapacityError.
    """
    if not isinstance(decimal_digits, int) or decimal_digits < 1:
        raise CapacityError(f"decimal_digits must be a positive int, got {decimal_digits!r}")
    if decimal_digits > DIGIT_CEILING:
        raise CapacityError(
            f"decimal_digits={decimal_digits} exceeds ceiling {DIGIT_CEILING}"
        )
    working_bits = math.ceil(decimal_digits * _LOG2_10) + guard_bits
    with gmpy2.context(precision=working_bits):
        target = mpfr(10) ** (-decimal_digits)
    return PrecisionContext(working_bits, target, guard_bits)


def _combine_rigor(a: str, b: str) -> str:
    return RIGOROUS if a == RIGOROUS and b == RIGOROUS else HEURISTIC


def _op_bits(*values) -> int:
    return max(53, *(v.precision for v in values)) + 8


@dataclass(frozen=True)
class BoundedValue:
    """A number with an absolute error bound.

    rigor records whether abs_error_bound is backed by a proof-shaped
    argument (truncation bound plus rounding slop) or by a heuristic such as
    the difference of successive extrapolation stages.

    Arithmetic widens bounds conservatively: bound computations run under
    upward rounding, and every operation adds one ulp of the result for the
    final rounding step.  Combining a rigorous value with a heuristic one
    yields a heuristic result.
    """

    value: mpfr
    abs_error_bound: mpfr
    rigor: str = RIGOROUS

    def __post_init__(self):
        if self.rigor not in (RIGOROUS, HEURISTIC):
            raise ValueError(f"unknown rigor {self.rigor!r}")
        if gmpy2.is_nan(self.value) or self.abs_error_bound < 0:
            raise ValueError("BoundedValue needs a non-NaN value and bound >= 0")

    @classmethod
    def exact(cls, x, bits: int = 0) -> "BoundedValue":
        """Wrap a value known exactly (its binary representation is the value)."""
        if bits:
            with gmpy2.context(precision=bits):
                v = mpfr(x)
        else:
            v = mpfr(x) if not isinstance(x, mpfr) else x
        return cls(v, mpfr(0), RIGOROUS)

    def _binary(self, other: "BoundedValue", op) -> "BoundedValue":
        p = _op_bits(self.value, other.value)
        with gmpy2.context(precision=p):
            v = op(self.value, other.value)
        with gmpy2.context(precision=p, round=gmpy2.RoundUp):
            slop = abs(v) * (mpfr(2) ** (1 - p))
            if op is _mul:
                e = (
                    abs(self.value) * other.abs_error_bound
                    + abs(other.value) * self.abs_error_bound
                    + self.abs_error_bound * other.abs_error_bound
                    + slop
                )
            else:
                e = self.abs_error_bound + other.abs_error_bound + slop
        return BoundedValue(v, e, _combine_rigor(self.rigor, other.rigor))

    def __add__(self, other: "BoundedValue") -> "BoundedValue":
        return self._binary(other, _add)

    def __sub__(self, other: "BoundedValue") -> "BoundedValue":
        return self._binary(other, _sub)

    def __mul__(self, other: "BoundedValue") -> "BoundedValue":
        return self._binary(other, _mul)

    def __neg__(self) -> "BoundedValue":
        with gmpy2.context(precision=self.value.precision):
            v = -self.value
        return BoundedValue(v, self.abs_error_bound, self.rigor)

    def scale(self, coeff) -> "BoundedValue":
        """Multiply by an exact scalar (int or rational)."""
        q = gmpy2.mpq(coeff.numerator, coeff.denominator)
        p = _op_bits(self.value)
        with gmpy2.context(precision=p):
            v = self.value * q
        with gmpy2.context(precision=p, round=gmpy2.RoundUp):
            # abs on the exact rational first: converting a negative q under
            # RoundUp would round its magnitude down
            e = mpfr(abs(q)) * self.abs_error_bound + abs(v) * (mpfr(2) ** (1 - p))
        return BoundedValue(v, e, self.rigor)

    def pow_int(self, k: int) -> "BoundedValue":
        if not isinstance(k, int) or k < 1:
            raise ValueError("pow_int wants a positive integer exponent")
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def within(self, other: "BoundedValue") -> bool:
        """True when the two values agree to their combined error bounds."""
        p = _op_bits(self.value, other.value) + 8
        with gmpy2.context(precision=p):
            diff = abs(self.value - other.value)
        with gmpy2.context(precision=p, round=gmpy2.RoundUp):
            allowance = self.abs_error_bound + other.abs_error_bound
        return diff <= allowance


def _add(a, b):
    return a + b


def _sub(a, b):
    return a - b


def _mul(a, b):
    return a * b
