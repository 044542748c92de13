"""End-to-end identity checks: reference values, consistency, failure paths."""

import math
from fractions import Fraction

import gmpy2
import pytest
from gmpy2 import mpfr

from tstar import checks
from tstar.checks import (
    CHECK_IDS,
    DEFAULT_TOLERANCES,
    check_beta_table,
    check_corollary,
    check_gencev,
    check_L1i,
    check_L1ii,
    check_L2i,
    check_L2ii,
    check_L2iii,
    check_L2iv,
    check_L3,
    check_oracle_tstar,
    check_oracle_zetastar,
    check_poly,
    check_R1,
    check_R2,
    check_R3,
    check_theorem1,
    default_context,
)
from tstar.errors import ExtrapolationError
from tstar.precision import make_context
from tstar.quadrature import integrate
from tstar.report import STATUS_FAIL, STATUS_INCONCLUSIVE, STATUS_PASS

CTX15 = make_context(15)


def _val(s: str) -> float:
    return float(s)


class TestRegistry:
    def test_ids_and_tolerances_aligned(self):
        assert set(DEFAULT_TOLERANCES) == set(CHECK_IDS)
        assert len(CHECK_IDS) == 17
        for ident in CHECK_IDS:
            assert default_context(ident).decimal_digits >= 20


class TestSeriesChecks:
    def test_theorem1_depth0(self):
        rep = check_theorem1(0, CTX15)
        assert rep.status == STATUS_PASS
        assert abs(_val(rep.lhs) - math.pi ** 2 / 2) < 1e-12
        assert rep.work > 1000

    def test_gencev_depth0_is_2ln2(self):
        rep = check_gencev(0, CTX15)
        assert rep.status == STATUS_PASS
        assert abs(_val(rep.lhs) - 2 * math.log(2)) < 1e-12

    def test_inconclusive_when_extrapolation_fails(self, monkeypatch):
        def explode(family, ctx, **kwargs):
            raise ExtrapolationError("synthetic non-convergence")

        monkeypatch.setattr(checks, "evaluate_series", explode)
        rep = check_theorem1(1, CTX15)
        assert rep.status == STATUS_INCONCLUSIVE
        assert "synthetic non-convergence" in rep.method
        assert rep.abs_error == "nan"

    def test_fail_on_wrong_closed_form(self, monkeypatch):
        from tstar.closedform import rhs_gencev

        monkeypatch.setattr(checks, "rhs_theorem1", rhs_gencev)
        rep = check_theorem1(0, CTX15)
        assert rep.status == STATUS_FAIL

    def test_corollary_reduced_forms(self):
        for i in (1, 2, 3, 4):
            rep = check_corollary(i)
            assert rep.status == STATUS_PASS
            assert _val(rep.abs_error) <= 1e-18
        with pytest.raises(ValueError):
            check_corollary(5)

    def test_beta_table_closed_forms(self):
        rep = check_beta_table(7)
        assert rep.status == STATUS_PASS
        assert _val(rep.abs_error) <= 1e-25
        with pytest.raises(ValueError):
            check_beta_table(4)


class TestExactChecks:
    def test_oracle_reports_exact_agreement(self):
        rep = check_oracle_tstar(5, 3)
        assert rep.status == STATUS_PASS
        assert rep.abs_error == "0"
        assert rep.tolerance == "0"
        assert rep.work == math.comb(5 + 3 - 1, 3)
        rep = check_oracle_zetastar(12, 4)
        assert rep.status == STATUS_PASS and rep.abs_error == "0"

    def test_poly_check(self):
        for n in (1, 7, 50):
            for j in (2, 3):
                rep = check_poly(n, j)
                assert rep.status == STATUS_PASS and rep.abs_error == "0"
        with pytest.raises(ValueError):
            check_poly(5, 4)


class TestMomentChecks:
    def test_cos_moment_base_case(self):
        rep = check_L1i(0, 1)
        assert rep.status == STATUS_PASS
        assert abs(_val(rep.lhs) - 1) < 1e-15

    def test_cos_moment_second_case(self):
        rep = check_L1i(1, 1)
        assert rep.status == STATUS_PASS
        assert abs(_val(rep.rhs) - (math.pi ** 2 / 4 - 2)) < 1e-12

    def test_kernel_moment_base_case(self):
        rep = check_L1ii(0, 1)
        assert rep.status == STATUS_PASS
        assert abs(_val(rep.lhs) - 2) < 1e-12

    def test_kernel_is_sum_of_cosine_moments(self):
        # the order-k kernel integrand is 2 sum_{n<=k} cos((2n-1)x), so the
        # moments must satisfy the same linear relation
        for m, k in ((0, 3), (1, 2), (2, 4)):
            whole = _val(check_L1ii(m, k).lhs)
            parts = sum(_val(check_L1i(m, n).lhs) for n in range(1, k + 1))
            assert abs(whole - 2 * parts) < 1e-12

    def test_odd_cos_power_moments(self):
        rep = check_L3(0, 2)
        assert rep.status == STATUS_PASS
        assert abs(_val(rep.rhs) - 2 / 3) < 1e-15
        rep = check_L3(1, 1)
        assert abs(_val(rep.lhs) - (math.pi ** 2 / 4 - 2)) < 1e-12

    def test_even_cos_power_moments(self):
        rep = check_R3(0, 1)
        assert rep.status == STATUS_PASS
        assert abs(_val(rep.rhs) - math.pi / 4) < 1e-15
        rep = check_R3(0, 2)
        assert abs(_val(rep.rhs) - 3 * math.pi / 16) < 1e-15

    def test_plain_cos_moment(self):
        rep = check_R1(1, 1)
        assert rep.status == STATUS_PASS
        assert abs(_val(rep.rhs) + math.pi / 4) < 1e-15
        rep = check_R1(0, 3)
        assert rep.status == STATUS_PASS
        assert rep.rhs == "0"

    def test_log_sine_moments(self):
        rep = check_R2(0)
        assert rep.status == STATUS_PASS
        assert abs(_val(rep.lhs) + math.pi / 2 * math.log(2)) < 1e-12
        assert check_R2(2).status == STATUS_PASS

    def test_log_sine_over_cos_moment(self):
        rep = check_L2iv(0)
        assert rep.status == STATUS_PASS
        assert abs(_val(rep.rhs) + math.pi ** 2 / 8) < 1e-12

    def test_ti_integral(self):
        rep = check_L2iii(0)
        assert rep.status == STATUS_PASS
        assert abs(_val(rep.rhs) - math.pi ** 2 / 32) < 1e-12

    def test_argument_validation(self):
        for fn in (check_L1i, check_L3, check_R1, check_R3):
            with pytest.raises(ValueError):
                fn(-1, 1)
            with pytest.raises(ValueError):
                fn(0, 0)
        with pytest.raises(ValueError):
            check_R2(-1)
        with pytest.raises(ValueError):
            check_L2iv(-2)


class TestTangentLogSinExpansion:
    def test_sample_points(self):
        rep = check_L2i(1, 4, K=2000)
        assert rep.status == STATUS_PASS
        assert _val(rep.abs_error) <= 1e-3

    def test_coefficients_match_their_integral_form(self):
        # a_k = int_0^1 (1-t)/(1+t) t^(k-1) dt, the route the expansion
        # coefficients come from; also pins the 1/(k(k+1)) envelope
        ctx = make_context(20)
        with gmpy2.context(precision=ctx.working_bits + 16):
            ln2 = gmpy2.const_log2()
            hbar = mpfr(0)
            for k in range(1, 6):
                a_formula = 2 * (-1) ** (k - 1) * (ln2 - hbar) - mpfr(1) / k
                res = integrate(
                    lambda t, k=k: (1 - t) / (1 + t) * t ** (k - 1), 0, 1, ctx
                )
                assert abs(a_formula - res.value) < 1e-18
                assert 0 < a_formula <= Fraction(1, k * (k + 1)) + Fraction(1, 10 ** 15)
                hbar += mpfr((-1) ** (k - 1)) / k

    def test_domain(self):
        with pytest.raises(ValueError):
            check_L2i(1, 2)  # x = pi/2 endpoint excluded
        with pytest.raises(ValueError):
            check_L2i(0, 3)
        with pytest.raises(ValueError):
            check_L2i(1, 3, K=2)


class TestAltHarmonicGeneratingFunction:
    def test_quarter_point(self):
        rep = check_L2ii(25, 0)
        assert rep.status == STATUS_PASS
        assert _val(rep.abs_error) <= 1e-10

    def test_near_one_argument_stays_accurate(self):
        # regression: t = 0.9 at depth 2 once lost the argument to a 53-bit
        # round-off inside the Ti evaluation
        rep = check_L2ii(90, 2)
        assert rep.status == STATUS_PASS
        assert _val(rep.abs_error) <= 1e-14

    def test_domain(self):
        with pytest.raises(ValueError):
            check_L2ii(0, 1)
        with pytest.raises(ValueError):
            check_L2ii(100, 1)


class TestEffectiveTolerance:
    def test_unreachable_tolerance_is_widened_to_the_bounds(self):
        rep = check_L1i(0, 1, tolerance="1e-60")
        assert rep.status == STATUS_PASS
        assert float(rep.tolerance) > 1e-60

    def test_loose_tolerance_passes_through(self):
        rep = check_L1i(0, 1, tolerance="1e-6")
        assert rep.status == STATUS_PASS
        assert rep.tolerance == "1.00e-06"
