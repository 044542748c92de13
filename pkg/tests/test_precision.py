"""Precision contexts and bound-carrying arithmetic."""

from fractions import Fraction

import gmpy2
import pytest
from gmpy2 import mpfr
from hypothesis import given, settings
from hypothesis import strategies as st

from tstar.errors import CapacityError, PrecisionError
from tstar.precision import (
    DIGIT_CEILING,
    HEURISTIC,
    RIGOROUS,
    BoundedValue,
    PrecisionContext,
    make_context,
)


class TestMakeContext:
    def test_digits_round_trip(self):
        for d in (1, 5, 20, 40, 100, 1000):
            ctx = make_context(d)
            assert ctx.decimal_digits == d

    def test_target_value(self):
        ctx = make_context(20)
        with gmpy2.context(precision=ctx.working_bits):
            assert ctx.target_abs_error == mpfr(10) ** -20

    def test_working_bits_cover_target_plus_guard(self):
        for d in (1, 7, 33, 250):
            ctx = make_context(d)
            with gmpy2.context(precision=64):
                needed = int(gmpy2.ceil(-gmpy2.log2(ctx.target_abs_error)))
            assert ctx.working_bits >= needed + ctx.guard_bits

    def test_rejects_bad_digit_counts(self):
        for bad in (0, -3, DIGIT_CEILING + 1):
            with pytest.raises(CapacityError):
                make_context(bad)
        with pytest.raises(CapacityError):
            make_context("12")

    def test_invariant_enforced_on_direct_construction(self):
        with pytest.raises(PrecisionError):
            PrecisionContext(working_bits=40, target_abs_error=mpfr("1e-30"))
        with pytest.raises(PrecisionError):
            PrecisionContext(working_bits=128, target_abs_error=mpfr(0))
        with pytest.raises(PrecisionError):
            PrecisionContext(working_bits=128, target_abs_error=mpfr("nan"))

    def test_activate_sets_ambient_precision(self):
        ctx = make_context(30)
        with ctx.activate():
            assert gmpy2.get_context().precision == ctx.working_bits
        with ctx.activate(extra_bits=16):
            assert gmpy2.get_context().precision == ctx.working_bits + 16


def _frac(x) -> Fraction:
    """Exact rational value of an mpfr (mpfr payloads are dyadic)."""
    q = gmpy2.mpq(x)
    return Fraction(int(q.numerator), int(q.denominator))


def _covers(bv: BoundedValue, lo: Fraction, hi: Fraction) -> bool:
    """True when [value - bound, value + bound] contains [lo, hi], exactly."""
    v, e = _frac(bv.value), _frac(bv.abs_error_bound)
    return v - e <= lo and hi <= v + e


finite = st.floats(
    min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False
)
bounds = st.floats(min_value=0, max_value=1e-3, allow_nan=False)


class TestBoundedValue:
    def test_exact_has_zero_bound(self):
        bv = BoundedValue.exact(7)
        assert bv.abs_error_bound == 0 and bv.rigor == RIGOROUS

    def test_rejects_nan_and_negative_bound(self):
        with pytest.raises(ValueError):
            BoundedValue(mpfr("nan"), mpfr(0))
        with pytest.raises(ValueError):
            BoundedValue(mpfr(1), mpfr(-1e-30))
        with pytest.raises(ValueError):
            BoundedValue(mpfr(1), mpfr(0), rigor="vibes")

    def test_rigor_combination(self):
        r = BoundedValue(mpfr(1), mpfr(0), RIGOROUS)
        h = BoundedValue(mpfr(1), mpfr(0), HEURISTIC)
        assert (r + r).rigor == RIGOROUS
        assert (r + h).rigor == HEURISTIC
        assert (h * r).rigor == HEURISTIC
        assert (-h).rigor == HEURISTIC

    def test_neg_preserves_precision_and_value(self):
        # unary minus must not round the payload down to ambient precision
        with gmpy2.context(precision=200):
            x = gmpy2.sqrt(mpfr(2))
            expected = -x
        bv = BoundedValue(x, mpfr("1e-50"))
        with gmpy2.context(precision=53):
            neg = -bv
        assert neg.value.precision == 200
        assert neg.value == expected
        assert neg.abs_error_bound == bv.abs_error_bound

    @settings(max_examples=200, deadline=None)
    @given(a=finite, b=finite, ea=bounds, eb=bounds)
    def test_ops_contain_interval_arithmetic(self, a, b, ea, eb):
        x = BoundedValue(mpfr(a), mpfr(ea))
        y = BoundedValue(mpfr(b), mpfr(eb))
        fa, fb = Fraction(a), Fraction(b)
        fea, feb = Fraction(ea), Fraction(eb)
        assert _covers(x + y, fa + fb - fea - feb, fa + fb + fea + feb)
        assert _covers(x - y, fa - fb - fea - feb, fa - fb + fea + feb)
        corners = [
            (fa + sa * fea) * (fb + sb * feb) for sa in (-1, 1) for sb in (-1, 1)
        ]
        assert _covers(x * y, min(corners), max(corners))

    @settings(max_examples=100, deadline=None)
    @given(a=finite, ea=bounds, num=st.integers(-50, 50), den=st.integers(1, 50))
    def test_scale_contains_interval(self, a, ea, num, den):
        q = Fraction(num, den)
        x = BoundedValue(mpfr(a), mpfr(ea))
        ends = [(Fraction(a) + s * Fraction(ea)) * q for s in (-1, 1)]
        assert _covers(x.scale(q), min(ends), max(ends))

    def test_pow_int(self):
        x = BoundedValue(mpfr(3), mpfr("1e-20"))
        cubed = x.pow_int(3)
        assert abs(cubed.value - 27) < 1e-15
        assert cubed.abs_error_bound >= mpfr("2.6e-19")  # ~27e-20 spread over 3 factors
        with pytest.raises(ValueError):
            x.pow_int(0)

    def test_within_symmetry_and_outcome(self):
        a = BoundedValue(mpfr(1), mpfr("1e-10"))
        b = BoundedValue(mpfr(1) + mpfr("1.5e-10"), mpfr("1e-10"))
        c = BoundedValue(mpfr(1) + mpfr("3e-10"), mpfr("1e-10"))
        assert a.within(b) and b.within(a)
        assert not a.within(c) and not c.within(a)

    def test_bound_accounts_for_result_rounding(self):
        # exact inputs whose product still rounds: the bound must be nonzero
        with gmpy2.context(precision=60):
            x = BoundedValue.exact(1 + mpfr(2) ** -55)
        prod = x * x
        assert prod.abs_error_bound > 0
