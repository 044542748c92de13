"""Alternating-series constants: Dirichlet beta, Dirichlet eta, inverse
tangent integrals, and the Euler-number closed forms that cross-check them.

All series handled here have the shape sum_k (-1)^k a_k with (a_k) totally
monotone (each a_k is a moment of a positive measure on [0,1]).  For such
series the Chebyshev-polynomial acceleration scheme converges geometrically:
after n combined terms the truncation error is at most 2*a_0*(3+sqrt(8))^-n,
roughly 0.76 decimal digits per term.  That bound is what makes the returned
error bounds rigorous rather than heuristic.

Every constant is evaluated twice (different term counts, different working
precision) and the two runs must agree within the model bound; odd-order
beta values are additionally checked against their exact Euler-number closed
form.  Disagreement raises ConsistencyError rather than widening a bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import gmpy2
from gmpy2 import mpfr, mpq

from .errors import CapacityError, ConsistencyError, PrecisionError
from .precision import RIGOROUS, BoundedValue, PrecisionContext

# Acceleration converges like (3+sqrt(8))^-n; 5.8 underestimates the base so
# bounds computed with it stay on the safe side.
_ACCEL_BASE_SAFE = 5.8
_TERMS_PER_DIGIT = 1.3071  # slightly above ln(10)/ln(3+sqrt(8))

EULER_INDEX_LIMIT = 300


def _terms_needed(target_digits: float) -> int:
    return math.ceil((target_digits + 4) * _TERMS_PER_DIGIT) + 4


def _target_digits(ctx: PrecisionContext) -> float:
    with gmpy2.context(precision=64):
        return float(-gmpy2.log10(ctx.target_abs_error))


def accelerated_alternating_sum(term, n_terms: int, bits: int) -> mpfr:
    """Combine n_terms of sum_k (-1)^k term(k) with Chebyshev acceleration.

    term(k) is called once for each k = 0..n_terms-1, in order, under a
    context of `bits` precision, and must return the positive magnitude a_k.
    Only valid when (a_k) is totally monotone.
    """
    with gmpy2.context(precision=bits):
        d = (3 + gmpy2.sqrt(mpfr(8))) ** n_terms
        d = (d + 1 / d) / 2
        b = mpfr(-1)
        c = -d
        s = mpfr(0)
        for k in range(n_terms):
            c = b - c
            s = s + c * term(k)
            b = b * (2 * (k + n_terms) * (k - n_terms)) / ((2 * k + 1) * (k + 1))
        return s / d


def _accel_bound(a0, n_terms: int, bits: int, value) -> mpfr:
    # truncation model plus accumulated-rounding slop, both rounded upward
    with gmpy2.context(precision=64, round=gmpy2.RoundUp):
        trunc = 2 * mpfr(a0) * mpfr(_ACCEL_BASE_SAFE) ** (-n_terms)
        slop = (8 * n_terms + 16) * mpfr(2) ** (1 - bits) * (1 + mpfr(a0) + abs(mpfr(value)))
        return trunc + slop


def _accelerated_constant(term_factory, ctx: PrecisionContext, a0) -> BoundedValue:
    """Run the acceleration twice and cross-check the runs against the model.

    term_factory(bits) must return a fresh term(k) callable (the factory gets
    called once per run so streaming state is not shared between runs).
    """
    digits = _target_digits(ctx)
    n1 = _terms_needed(digits)
    bits1 = ctx.working_bits + 16
    bits2 = ctx.working_bits + 32
    v1 = accelerated_alternating_sum(term_factory(bits1), n1, bits1)
    v2 = accelerated_alternating_sum(term_factory(bits2), n1 + 8, bits2)
    model1 = _accel_bound(a0, n1, bits1, v1)
    with gmpy2.context(precision=bits2 + 8):
        drift = abs(v1 - v2)
    if drift > 2 * model1:
        raise ConsistencyError(
            f"acceleration runs disagree: |v1-v2|={drift} exceeds model bound {model1}"
        )
    bound = _accel_bound(a0, n1 + 8, bits2, v2)
    if bound > ctx.target_abs_error:
        raise PrecisionError(
            f"acceleration bound {bound} misses target {ctx.target_abs_error}"
        )
    return BoundedValue(v2, bound, RIGOROUS)


def pi_value(ctx: PrecisionContext) -> BoundedValue:
    with gmpy2.context(precision=ctx.working_bits + 8):
        v = gmpy2.const_pi()
        bound = abs(v) * mpfr(2) ** (-ctx.working_bits - 7)
    return BoundedValue(v, bound, RIGOROUS)


def ln2_value(ctx: PrecisionContext) -> BoundedValue:
    with gmpy2.context(precision=ctx.working_bits + 8):
        v = gmpy2.const_log2()
        bound = abs(v) * mpfr(2) ** (-ctx.working_bits - 7)
    return BoundedValue(v, bound, RIGOROUS)


def beta_series(m: int, ctx: PrecisionContext) -> BoundedValue:
    """Dirichlet beta(m) = sum_k (-1)^k / (2k+1)^m via accelerated summation.

    m = 0 is rejected: the defining series has no decaying terms there.
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"beta needs an integer order m >= 1, got {m!r}")

    def factory(bits):
        return lambda k: mpfr(2 * k + 1) ** (-m)

    return _accelerated_constant(factory, ctx, a0=1)


def euler_number(n: int, limit: int = EULER_INDEX_LIMIT) -> int:
    """Exact Euler number E_n (zero for odd n), from the binomial recurrence
    sum_{j<=k} C(2k,2j) E_{2j} = 0 with E_0 = 1."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"Euler-number index must be a non-negative int, got {n!r}")
    if n > limit:
        raise CapacityError(f"Euler-number index {n} beyond limit {limit}")
    if n % 2 == 1:
        return 0
    k = n // 2
    while len(_EULER_EVEN) <= k:
        i = len(_EULER_EVEN)
        acc = 0
        for j in range(i):
            acc += math.comb(2 * i, 2 * j) * _EULER_EVEN[j]
        _EULER_EVEN.append(-acc)
    return _EULER_EVEN[k]


_EULER_EVEN = [1]


def beta_closed_form_odd(m: int, ctx: PrecisionContext) -> BoundedValue:
    """beta(2k+1) = (-1)^k E_2k / (2 (2k)!) * (pi/2)^(2k+1), exactly.

    This is the classical closed form for odd orders; only pi is inexact
    here, so the bound is a few ulps.
    """
    if not isinstance(m, int) or m < 1 or m % 2 == 0:
        raise ValueError(f"closed form only exists for odd m >= 1, got {m!r}")
    k = (m - 1) // 2
    coeff = mpq((-1) ** k * euler_number(2 * k), 2 * math.factorial(2 * k))
    bits = ctx.working_bits + 16
    with gmpy2.context(precision=bits):
        v = mpfr(coeff) * (gmpy2.const_pi() / 2) ** m
    with gmpy2.context(precision=64, round=gmpy2.RoundUp):
        bound = (4 * m + 8) * abs(v) * mpfr(2) ** (1 - bits)
    return BoundedValue(v, bound, RIGOROUS)


def beta(m: int, ctx: PrecisionContext) -> BoundedValue:
    """Dirichlet beta(m) with a rigorous bound at ctx's target.

    Odd orders are verified against the Euler-number closed form; a mismatch
    beyond the joint bounds raises ConsistencyError.
    """
    out = beta_series(m, ctx)
    if m % 2 == 1:
        cf = beta_closed_form_odd(m, ctx)
        if not out.within(cf):
            raise ConsistencyError(
                f"beta({m}) series {out.value} disagrees with closed form {cf.value}"
            )
    return out


def eta(s: int, ctx: PrecisionContext) -> BoundedValue:
    """Dirichlet eta(s) = sum_k (-1)^k / (k+1)^s; eta(1) is checked against ln 2."""
    if not isinstance(s, int) or s < 1:
        raise ValueError(f"eta needs an integer order s >= 1, got {s!r}")

    def factory(bits):
        return lambda k: mpfr(k + 1) ** (-s)

    out = _accelerated_constant(factory, ctx, a0=1)
    if s == 1:
        if not out.within(ln2_value(ctx)):
            raise ConsistencyError(f"eta(1)={out.value} disagrees with ln 2")
    return out


def ti(m: int, x, ctx: PrecisionContext) -> BoundedValue:
    """Inverse tangent integral Ti_m(x) = sum_k (-1)^k x^(2k+1) / (2k+1)^m.

    Defined here for |x| <= 1 (the closed forms used elsewhere live on that
    interval); larger arguments are rejected.  Ti_1 is cross-checked against
    arctan, and Ti_m(1) against beta(m).
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"ti needs an integer order m >= 1, got {m!r}")
    with gmpy2.context(precision=ctx.working_bits + 32):
        xm = mpfr(x) if not isinstance(x, mpfr) else x
        if gmpy2.is_nan(xm) or abs(xm) > 1:
            raise ValueError(f"ti is only evaluated for |x| <= 1, got {x!r}")
        if xm == 0:
            return BoundedValue.exact(mpfr(0))
        negative = xm < 0
        ax = abs(xm)  # under the context: abs() rounds to ambient precision

    def factory(bits):
        with gmpy2.context(precision=bits):
            ax2 = ax * ax
        state = {"pow": None}

        def term(k):
            state["pow"] = ax if k == 0 else state["pow"] * ax2
            return state["pow"] / mpfr(2 * k + 1) ** m

        return term

    out = _accelerated_constant(factory, ctx, a0=ax)
    if negative:
        out = -out
    if m == 1:
        with gmpy2.context(precision=ctx.working_bits + 16):
            ref = gmpy2.atan(xm)
        refv = BoundedValue(ref, abs(ref) * mpfr(2) ** (-ctx.working_bits - 14), RIGOROUS)
        if not out.within(refv):
            raise ConsistencyError(f"Ti_1({x}) disagrees with arctan")
    if ax == 1:
        ref = beta(m, ctx)
        if negative:
            ref = -ref
        if not out.within(ref):
            raise ConsistencyError(f"Ti_{m}({x}) disagrees with beta({m})")
    return out


def ti_point(m: int, x, bits: int) -> mpfr:
    """Single-shot Ti_m(x) for 0 <= x <= 1 at `bits` working precision.

    Plain mpfr output for use inside quadrature integrands, where the
    dual-run cross-checking of ti() would double the per-node cost.  The
    accelerated scheme keeps the term count flat in x, so abscissas
    arbitrarily close to 1 are fine.
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"ti_point needs an integer order m >= 1, got {m!r}")
    with gmpy2.context(precision=bits):
        xm = mpfr(x)
        if not 0 <= xm <= 1:
            raise ValueError(f"ti_point is defined for 0 <= x <= 1, got {x!r}")
        if xm == 0:
            return mpfr(0)
        x2 = xm * xm
    n_terms = _terms_needed(bits * 0.30103)
    state = {"pow": None}

    def term(k):
        state["pow"] = xm if k == 0 else state["pow"] * x2
        return state["pow"] / mpfr(2 * k + 1) ** m

    return accelerated_alternating_sum(term, n_terms, bits)


@dataclass(frozen=True)
class BetaTable:
    """beta(1..max_order) evaluated once under a shared context."""

    max_order: int
    values: tuple
    context: PrecisionContext

    @classmethod
    def build(cls, max_order: int, ctx: PrecisionContext) -> "BetaTable":
        if max_order < 1:
            raise ValueError("max_order must be >= 1")
        vals = tuple(beta(m, ctx) for m in range(1, max_order + 1))
        quarter_pi = pi_value(ctx).scale(mpq(1, 4))
        if not vals[0].within(quarter_pi):
            raise ConsistencyError("beta(1) table entry disagrees with pi/4")
        return cls(max_order, vals, ctx)

    def __getitem__(self, m: int) -> BoundedValue:
        if not 1 <= m <= self.max_order:
            raise CapacityError(f"beta table holds orders 1..{self.max_order}, got {m}")
        return self.values[m - 1]

    def __len__(self) -> int:
        return self.max_order
