"""Dirichlet beta/eta, Euler numbers, and the inverse tangent integral.

mpmath is used here as an independent reference implementation only; the
package itself never imports it.
"""

from fractions import Fraction

import gmpy2
import mpmath
import pytest
from gmpy2 import mpfr
from hypothesis import given, settings
from hypothesis import strategies as st

from tstar.constants import (
    BetaTable,
    accelerated_alternating_sum,
    beta,
    beta_closed_form_odd,
    beta_series,
    eta,
    euler_number,
    ln2_value,
    pi_value,
    ti,
    ti_point,
)
from tstar.errors import CapacityError
from tstar.precision import make_context

CTX30 = make_context(30)
CTX40 = make_context(40)


def _exact(x) -> Fraction:
    q = gmpy2.mpq(x)
    return Fraction(int(q.numerator), int(q.denominator))


def _close_to_mpmath(bv, ref_mpf, scale=4) -> bool:
    """|bv.value - ref| <= scale * bound + reference-conversion slop."""
    with gmpy2.context(precision=256):
        diff = abs(bv.value - mpfr(mpmath.nstr(ref_mpf, 50)))
        allowance = scale * bv.abs_error_bound + mpfr("1e-45")
    return diff <= allowance


class TestEulerNumbers:
    def test_frozen_values(self):
        expected = {0: 1, 2: -1, 4: 5, 6: -61, 8: 1385, 10: -50521, 12: 2702765}
        for n, v in expected.items():
            assert euler_number(n) == v

    def test_odd_indices_vanish(self):
        assert all(euler_number(n) == 0 for n in range(1, 20, 2))

    def test_rejects_bad_indices(self):
        with pytest.raises(ValueError):
            euler_number(-2)
        with pytest.raises(ValueError):
            euler_number(2.0)
        with pytest.raises(CapacityError):
            euler_number(302)


class TestBeta:
    def test_odd_closed_forms_are_pi_multiples(self):
        # beta(1) = pi/4, beta(3) = pi^3/32, beta(5) = 5 pi^5/1536,
        # beta(7) = 61 pi^7/184320
        cases = {1: Fraction(1, 4), 3: Fraction(1, 32), 5: Fraction(5, 1536),
                 7: Fraction(61, 184320)}
        for m, q in cases.items():
            got = beta_closed_form_odd(m, CTX40)
            with gmpy2.context(precision=CTX40.working_bits + 32):
                ref = gmpy2.const_pi() ** m * q.numerator / q.denominator
                assert abs(got.value - ref) <= 4 * got.abs_error_bound

    def test_series_matches_closed_form_odd(self):
        for m in (1, 3, 5, 7, 9, 11, 13):
            s = beta_series(m, CTX40)
            c = beta_closed_form_odd(m, CTX40)
            assert s.within(c)
            assert s.abs_error_bound <= CTX40.target_abs_error

    def test_beta2_is_catalan(self):
        mpmath.mp.dps = 60
        assert _close_to_mpmath(beta_series(2, CTX40), mpmath.catalan)

    def test_even_orders_against_hurwitz_zeta(self):
        # beta(s) = 4^-s * (zeta(s, 1/4) - zeta(s, 3/4))
        mpmath.mp.dps = 60
        for s in (2, 4, 6):
            ref = mpmath.mpf(4) ** -s * (
                mpmath.zeta(s, mpmath.mpf(1) / 4) - mpmath.zeta(s, mpmath.mpf(3) / 4)
            )
            assert _close_to_mpmath(beta_series(s, CTX40), ref)

    def test_bracketing_by_exact_partial_sums(self):
        # 40 terms end on a negative one, so S_40 <= beta <= S_40 + a_40
        for m in (3, 5):
            got = beta_series(m, CTX30)
            lo = sum(Fraction((-1) ** k, (2 * k + 1) ** m) for k in range(40))
            hi = lo + Fraction(1, 81 ** m)
            v = _exact(got.value)
            b = _exact(got.abs_error_bound)
            assert lo - b <= v <= hi + b

    def test_rejects_bad_orders(self):
        with pytest.raises(ValueError):
            beta_series(0, CTX30)
        with pytest.raises(ValueError):
            beta_closed_form_odd(2, CTX30)
        with pytest.raises(ValueError):
            beta_closed_form_odd(-3, CTX30)

    def test_beta_wrapper_cross_checks_odd(self):
        v = beta(5, CTX30)
        assert v.abs_error_bound <= CTX30.target_abs_error


class TestEta:
    def test_eta1_is_ln2(self):
        v = eta(1, CTX40)
        assert v.within(ln2_value(CTX40))

    def test_eta2_is_pi_squared_over_12(self):
        v = eta(2, CTX40)
        ref = pi_value(CTX40).pow_int(2).scale(Fraction(1, 12))
        assert v.within(ref)

    def test_eta3_frozen_digits(self):
        v = eta(3, CTX30)
        with gmpy2.context(precision=200):
            ref = mpfr("0.90154267736969571404980362113359")
            assert abs(v.value - ref) < mpfr("1e-29")

    def test_eta_against_mpmath(self):
        mpmath.mp.dps = 60
        for s in (1, 2, 3, 5, 9):
            assert _close_to_mpmath(eta(s, CTX40), mpmath.altzeta(s))

    def test_rejects_bad_orders(self):
        with pytest.raises(ValueError):
            eta(0, CTX30)


class TestAcceleratedSum:
    def test_ln2_series(self):
        # sum (-1)^k/(k+1) = ln 2, the canonical slow alternating series
        for bits in (64, 128, 256):
            n_terms = int(bits * 0.30103 * 1.31) + 8
            got = accelerated_alternating_sum(
                lambda k: mpfr(1) / (k + 1), n_terms, bits
            )
            with gmpy2.context(precision=bits + 16):
                assert abs(got - gmpy2.const_log2()) < mpfr(2) ** (8 - bits)

    def test_term_count_controls_error(self):
        # more terms, smaller error, down to the bit floor
        with gmpy2.context(precision=300):
            ref = gmpy2.const_log2()
        errs = []
        for n_terms in (8, 16, 32):
            got = accelerated_alternating_sum(lambda k: mpfr(1) / (k + 1), n_terms, 280)
            with gmpy2.context(precision=300):
                errs.append(abs(got - ref))
        assert errs[2] < errs[1] < errs[0]
        assert errs[2] < mpfr("1e-20")


class TestTi:
    def test_ti1_is_arctan(self):
        # the library cross-checks internally; failure would raise
        for x in (Fraction(1, 10), Fraction(1, 2), Fraction(99, 100), 1):
            v = ti(1, x, CTX30)
            with gmpy2.context(precision=CTX30.working_bits + 16):
                ref = gmpy2.atan(mpfr(x.numerator) / x.denominator if isinstance(x, Fraction) else mpfr(x))
                assert abs(v.value - ref) <= 4 * v.abs_error_bound + mpfr("1e-35")

    def test_ti_at_one_is_beta(self):
        for m in (2, 3, 5):
            assert ti(m, 1, CTX30).within(beta(m, CTX30))

    def test_odd_symmetry(self):
        a = ti(3, Fraction(2, 5), CTX30)
        b = ti(3, Fraction(-2, 5), CTX30)
        with gmpy2.context(precision=CTX30.working_bits + 16):
            assert abs(a.value + b.value) <= a.abs_error_bound + b.abs_error_bound

    def test_zero(self):
        v = ti(4, 0, CTX30)
        assert v.value == 0 and v.abs_error_bound == 0

    def test_high_precision_argument_not_truncated(self):
        # regression: the argument must be forwarded at working precision,
        # not squeezed through a 53-bit ambient context (which showed up as
        # a ~1e-16 error against this exact rational bracket)
        x = Fraction(9, 10)
        got = ti(5, x, CTX40)
        lo = sum(
            Fraction((-1) ** k) * x ** (2 * k + 1) / (2 * k + 1) ** 5
            for k in range(420)
        )
        hi = lo + x ** 841 / 841 ** 5  # 420 terms end negative
        v = _exact(got.value)
        b = _exact(got.abs_error_bound)
        assert b < Fraction(1, 10 ** 39)
        assert lo - b <= v <= hi + b

    def test_bound_meets_context_target(self):
        for m, x in ((2, Fraction(1, 3)), (5, Fraction(9, 10)), (3, Fraction(999, 1000))):
            assert ti(m, x, CTX30).abs_error_bound <= CTX30.target_abs_error

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            ti(0, Fraction(1, 2), CTX30)
        with pytest.raises(ValueError):
            ti(2, Fraction(11, 10), CTX30)
        with pytest.raises(ValueError):
            ti(2, mpfr("nan"), CTX30)

    @settings(max_examples=20, deadline=None)
    @given(num=st.integers(0, 100), m=st.integers(1, 6))
    def test_ti_point_matches_ti(self, num, m):
        x = Fraction(num, 100)
        bits = CTX30.working_bits
        pt = ti_point(m, gmpy2.mpq(x.numerator, x.denominator), bits + 32)
        full = ti(m, x, CTX30)
        with gmpy2.context(precision=bits + 48):
            assert abs(pt - full.value) <= 2 * full.abs_error_bound + mpfr(2) ** (10 - bits)

    def test_ti_point_domain(self):
        with pytest.raises(ValueError):
            ti_point(3, -0.5, 128)
        with pytest.raises(ValueError):
            ti_point(3, 1.5, 128)
        with pytest.raises(ValueError):
            ti_point(0, 0.5, 128)
        assert ti_point(3, 0, 128) == 0


class TestBetaTable:
    def test_build_and_lookup(self):
        table = BetaTable.build(9, CTX30)
        assert len(table) == 9
        quarter_pi = pi_value(CTX30).scale(Fraction(1, 4))
        assert table[1].within(quarter_pi)
        assert table[3].within(beta_closed_form_odd(3, CTX30))

    def test_out_of_range(self):
        table = BetaTable.build(3, CTX30)
        with pytest.raises(CapacityError):
            table[0]
        with pytest.raises(CapacityError):
            table[4]
        with pytest.raises(ValueError):
            BetaTable.build(0, CTX30)
