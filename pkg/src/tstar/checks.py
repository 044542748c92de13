"""Identity verification: every check computes both sides by independent
routes and wraps the comparison in a VerificationReport.

Route independence is the point.  Series limits come from streamed partial
sums plus extrapolation while their closed forms come from accelerated
constant evaluation; integral identities pit tanh-sinh quadrature against
symbolic pi/beta/eta combinations; the exact-arithmetic oracles compare a
streaming recurrence against literal nested sums.  A report PASSes when
|lhs - rhs| <= max(configured tolerance, sum of the two error bounds); the
second arm keeps an over-tight tolerance from flagging agreement that is
simply below what the requested precision can resolve.

Inconclusive outcomes (extrapolation or quadrature refusing to converge)
become INCONCLUSIVE reports rather than exceptions; genuine internal
contradictions (ConsistencyError) always propagate.
"""

from __future__ import annotations

import math
import time
from fractions import Fraction

import gmpy2
from gmpy2 import mpfr

from .closedform import (
    ClosedFormExpr,
    Term,
    beta_factor,
    beta_pair_sum,
    central_binomial_ratio,
    corollary_fixture,
    eta_factor,
    pi_factor,
    rhs_gencev,
    rhs_lemma3,
    rhs_theorem1,
)
from .constants import (
    _target_digits,
    _terms_needed,
    beta_closed_form_odd,
    beta_series,
    ti,
    ti_point,
)
from .errors import ExtrapolationError, QuadratureError
from .harmonic import (
    alt_odd_harmonic_exact,
    exact_state_at,
    t_star_bruteforce,
    t_star_poly_check,
    zeta_star_bruteforce,
)
from .precision import HEURISTIC, RIGOROUS, BoundedValue, PrecisionContext, make_context
from .quadrature import integrate, log_sin, pi_endpoint
from .report import (
    STATUS_FAIL,
    STATUS_PASS,
    VerificationReport,
    format_significant,
    inconclusive_report,
    make_report,
)
from .series import FamilyKind, SeriesFamily, evaluate_series

CHECK_IDS = (
    "theorem1",
    "gencev",
    "corollary",
    "L1i",
    "L1ii",
    "L2i",
    "L2ii",
    "L2iii",
    "L2iv",
    "L3",
    "R1",
    "R2",
    "R3",
    "oracle-tstar",
    "oracle-zetastar",
    "poly-identities",
    "beta-table",
)

DEFAULT_TOLERANCES = {
    "theorem1": "1e-15",
    "gencev": "1e-12",
    "corollary": "1e-18",
    "beta-table": "1e-25",
    "oracle-tstar": "0",
    "oracle-zetastar": "0",
    "poly-identities": "0",
    "L1i": "1e-12",
    "L1ii": "1e-12",
    "L2i": "5e-3",
    "L2ii": "1e-10",
    "L2iii": "1e-10",
    "L2iv": "1e-10",
    "L3": "1e-12",
    "R1": "1e-10",
    "R2": "1e-10",
    "R3": "1e-10",
}

DEFAULT_DIGITS = {ident: 20 for ident in CHECK_IDS}
DEFAULT_DIGITS["beta-table"] = 40

ORACLE_FORMAT_DIGITS = 17


def default_context(identity_id: str) -> PrecisionContext:
    return make_context(DEFAULT_DIGITS[identity_id])


def _elapsed_ms(started: float) -> int:
    return max(int((time.perf_counter() - started) * 1000), 0)


def _finish(
    identity_id: str,
    params,
    lhs: BoundedValue,
    rhs: BoundedValue,
    ctx: PrecisionContext,
    tolerance,
    *,
    method: str,
    work: int,
    started: float,
) -> VerificationReport:
    if tolerance is None:
        tolerance = DEFAULT_TOLERANCES[identity_id]
    with gmpy2.context(precision=64, round=gmpy2.RoundUp):
        tol = mpfr(tolerance)
        combined = lhs.abs_error_bound + rhs.abs_error_bound
        effective = tol if tol >= combined else combined
    return make_report(
        identity_id,
        params,
        lhs.value,
        rhs.value,
        effective,
        method=method,
        work=work,
        elapsed_ms=_elapsed_ms(started),
        digits=ctx.decimal_digits,
    )


def _pi_polynomial(coeffs: dict) -> ClosedFormExpr:
    """Expression sum_k coeffs[k] * pi^k from a {power: Fraction} map."""
    terms = tuple(
        Term(c, (pi_factor(k),) if k else ())
        for k, c in sorted(coeffs.items())
        if c != 0
    )
    return ClosedFormExpr(terms)


def _quadrature_value(res) -> BoundedValue:
    return BoundedValue(res.value, res.abs_error_estimate, HEURISTIC)


def _rational_string(q, digits: int = ORACLE_FORMAT_DIGITS) -> str:
    with gmpy2.context(precision=4 * digits + 32):
        return format_significant(mpfr(gmpy2.mpq(q.numerator, q.denominator)), digits)


# ---------------------------------------------------------------------------
# series identities


def check_theorem1(
    j: int,
    ctx: PrecisionContext | None = None,
    *,
    tolerance=None,
    backend: str | None = None,
) -> VerificationReport:
    """Central-binomial t-star series at depth j vs its beta-pair closed form."""
    ctx = ctx or default_context("theorem1")
    params = (("j", j),)
    started = time.perf_counter()
    try:
        lhs, trace = evaluate_series(SeriesFamily(FamilyKind.TSTAR, j), ctx, backend=backend)
    except ExtrapolationError as exc:
        return inconclusive_report(
            "theorem1",
            params,
            tolerance or DEFAULT_TOLERANCES["theorem1"],
            method="extrapolated series vs beta pairs",
            reason=f"extrapolation: {exc}",
            elapsed_ms=_elapsed_ms(started),
        )
    rhs = rhs_theorem1(j).evaluate(ctx)
    return _finish(
        "theorem1",
        params,
        lhs,
        rhs,
        ctx,
        tolerance,
        method=f"extrapolated series[{trace.backend}] vs beta pairs",
        work=trace.n_end,
        started=started,
    )


def check_gencev(
    j: int,
    ctx: PrecisionContext | None = None,
    *,
    tolerance=None,
    backend: str | None = None,
) -> VerificationReport:
    """Inverse-central-binomial zeta-star series at depth j vs 2*eta(2j+1)."""
    ctx = ctx or default_context("gencev")
    params = (("j", j),)
    started = time.perf_counter()
    try:
        lhs, trace = evaluate_series(
            SeriesFamily(FamilyKind.ZETASTAR, j), ctx, backend=backend
        )
    except ExtrapolationError as exc:
        return inconclusive_report(
            "gencev",
            params,
            tolerance or DEFAULT_TOLERANCES["gencev"],
            method="extrapolated series vs eta closed form",
            reason=f"extrapolation: {exc}",
            elapsed_ms=_elapsed_ms(started),
        )
    rhs = rhs_gencev(j).evaluate(ctx)
    return _finish(
        "gencev",
        params,
        lhs,
        rhs,
        ctx,
        tolerance,
        method=f"extrapolated series[{trace.backend}] vs eta closed form",
        work=trace.n_end,
        started=started,
    )


def check_corollary(
    i: int, ctx: PrecisionContext | None = None, *, tolerance=None
) -> VerificationReport:
    """Full beta-pair right side vs the reduced pi/G/beta constant, i in 1..4."""
    ctx = ctx or default_context("corollary")
    started = time.perf_counter()
    raw, reduced = corollary_fixture(i)
    lhs = raw.evaluate(ctx)
    rhs = reduced.evaluate(ctx)
    return _finish(
        "corollary",
        (("i", i),),
        lhs,
        rhs,
        ctx,
        tolerance,
        method="beta-pair sum vs reduced constant",
        work=len(raw.terms) + len(reduced.terms),
        started=started,
    )


def check_beta_table(
    m: int, ctx: PrecisionContext | None = None, *, tolerance=None
) -> VerificationReport:
    """Accelerated beta series vs the Euler-number closed form (odd m only)."""
    if m < 1 or m % 2 == 0:
        raise ValueError(f"closed forms cover odd orders only, got m={m}")
    ctx = ctx or default_context("beta-table")
    started = time.perf_counter()
    lhs = beta_series(m, ctx)
    rhs = beta_closed_form_odd(m, ctx)
    return _finish(
        "beta-table",
        (("m", m),),
        lhs,
        rhs,
        ctx,
        tolerance,
        method="accelerated series vs Euler closed form",
        work=_terms_needed(_target_digits(ctx)) + 8,
        started=started,
    )


# ---------------------------------------------------------------------------
# exact-arithmetic oracles


def _exact_report(
    identity_id: str, params, lhs_q, rhs_q, *, method: str, work: int, started: float
) -> VerificationReport:
    lhs_q = Fraction(int(lhs_q.numerator), int(lhs_q.denominator))
    rhs_q = Fraction(int(rhs_q.numerator), int(rhs_q.denominator))
    equal = lhs_q == rhs_q
    if equal:
        err = "0"
    else:
        err = _rational_string(abs(lhs_q - rhs_q), 3)
    return VerificationReport(
        identity_id=identity_id,
        params=tuple(params),
        lhs=_rational_string(lhs_q),
        rhs=_rational_string(rhs_q),
        abs_error=err,
        tolerance="0",
        method=method,
        work=work,
        elapsed_ms=_elapsed_ms(started),
        status=STATUS_PASS if equal else STATUS_FAIL,
    )


def check_oracle_tstar(n: int, j: int) -> VerificationReport:
    """Streaming odd-denominator star sum vs the literal nested sum, exactly."""
    started = time.perf_counter()
    lhs = exact_state_at(n, depth=j).t_star[j]
    rhs = t_star_bruteforce(n, j)
    return _exact_report(
        "oracle-tstar",
        (("n", n), ("j", j)),
        lhs,
        rhs,
        method="streaming recurrence vs nested sum (exact)",
        work=math.comb(n + j - 1, j) if j else 1,
        started=started,
    )


def check_oracle_zetastar(n: int, j: int) -> VerificationReport:
    """Streaming integer-denominator star sum vs the literal nested sum."""
    started = time.perf_counter()
    lhs = exact_state_at(n, depth=j).zeta_star[j]
    rhs = zeta_star_bruteforce(n, j)
    return _exact_report(
        "oracle-zetastar",
        (("n", n), ("j", j)),
        lhs,
        rhs,
        method="streaming recurrence vs nested sum (exact)",
        work=math.comb(n + j - 1, j) if j else 1,
        started=started,
    )


def check_poly(n: int, j: int) -> VerificationReport:
    """Power-sum polynomial expression of the depth-j star sum, exactly."""
    if j not in (2, 3):
        raise ValueError(f"polynomial identities are catalogued for j in {{2, 3}}, got {j}")
    started = time.perf_counter()
    res = t_star_poly_check(n)[j - 2]
    return _exact_report(
        "poly-identities",
        (("n", n), ("j", j)),
        res.lhs,
        res.rhs,
        method="odd-harmonic polynomial vs streamed star sum (exact)",
        work=n,
        started=started,
    )


# ---------------------------------------------------------------------------
# integral identities (quadrature vs closed forms)


def _quadrature_check(
    identity_id: str,
    params,
    integrand,
    upper,
    rhs_expr: ClosedFormExpr,
    ctx: PrecisionContext,
    tolerance,
    *,
    method: str,
    started: float,
    lower=0,
) -> VerificationReport:
    try:
        res = integrate(integrand, lower, upper, ctx)
    except QuadratureError as exc:
        return inconclusive_report(
            identity_id,
            params,
            tolerance or DEFAULT_TOLERANCES[identity_id],
            method=method,
            reason=f"quadrature: {exc}",
            elapsed_ms=_elapsed_ms(started),
        )
    lhs = _quadrature_value(res)
    rhs = rhs_expr.evaluate(ctx)
    return _finish(
        identity_id,
        params,
        lhs,
        rhs,
        ctx,
        tolerance,
        method=method,
        work=res.nodes_used,
        started=started,
    )


def check_L1i(
    m: int, n: int, ctx: PrecisionContext | None = None, *, tolerance=None
) -> VerificationReport:
    """Moment of cos((2n-1)x) over [0, pi/2] vs its alternating pi-polynomial."""
    if m < 0 or n < 1:
        raise ValueError("need m >= 0 and n >= 1")
    ctx = ctx or default_context("L1i")
    started = time.perf_counter()
    f2m = math.factorial(2 * m)
    coeffs: dict = {}
    for i in range(m + 1):
        power = 2 * m - 2 * i
        c = Fraction(
            (-1) ** (i + n - 1) * f2m,
            (2 * n - 1) ** (2 * i + 1) * math.factorial(power) * 2 ** power,
        )
        coeffs[power] = coeffs.get(power, Fraction(0)) + c

    def f(x):
        return x ** (2 * m) * gmpy2.cos((2 * n - 1) * x)

    return _quadrature_check(
        "L1i",
        (("m", m), ("n", n)),
        f,
        pi_endpoint(ctx),
        _pi_polynomial(coeffs),
        ctx,
        tolerance,
        method="tanh-sinh quadrature vs pi polynomial",
        started=started,
    )


def check_L1ii(
    m: int, k: int, ctx: PrecisionContext | None = None, *, tolerance=None
) -> VerificationReport:
    """Moment of the order-k Dirichlet kernel vs alternating odd harmonics."""
    if m < 0 or k < 1:
        raise ValueError("need m >= 0 and k >= 1")
    ctx = ctx or default_context("L1ii")
    started = time.perf_counter()
    f2m = math.factorial(2 * m)
    coeffs: dict = {}
    for i in range(m + 1):
        power = 2 * m - 2 * i
        obar = alt_odd_harmonic_exact(k, 2 * i + 1)
        c = (
            Fraction(2 * f2m * (-1) ** i, math.factorial(power) * 2 ** power)
            * obar
        )
        coeffs[power] = coeffs.get(power, Fraction(0)) + c

    def f(x):
        if x == 0:  # removable: the kernel's limit there
            return mpfr(2 * k)
        return x ** (2 * m) * gmpy2.sin(2 * k * x) / gmpy2.sin(x)

    return _quadrature_check(
        "L1ii",
        (("m", m), ("k", k)),
        f,
        pi_endpoint(ctx),
        _pi_polynomial(coeffs),
        ctx,
        tolerance,
        method="tanh-sinh quadrature vs odd-harmonic pi polynomial",
        started=started,
    )


def check_L2i(
    x_num: int,
    x_den: int,
    ctx: PrecisionContext | None = None,
    *,
    K: int = 10_000,
    tolerance=None,
) -> VerificationReport:
    """tan(x) ln(sin x) vs its truncated sine expansion at x = pi*x_num/x_den.

    The expansion coefficients are a_k = 2(-1)^(k-1)(ln 2 - Hbar_{k-1}) - 1/k
    with Hbar the alternating harmonic numbers; 0 < a_k <= 1/(k(k+1)) gives
    the rigorous 1/(K+1) tail bound, so accuracy is truncation-limited.
    """
    frac = Fraction(x_num, x_den)
    if not 0 < frac < Fraction(1, 2):
        raise ValueError("sample point must satisfy 0 < x_num/x_den < 1/2")
    if K < 4:
        raise ValueError("need K >= 4 expansion terms")
    ctx = ctx or default_context("L2i")
    started = time.perf_counter()
    with ctx.activate(extra_bits=16):
        bits = gmpy2.get_context().precision
        x = gmpy2.const_pi() * x_num / x_den
        lhs_v = gmpy2.tan(x) * log_sin(x)
        ln2 = gmpy2.const_log2()
        total = mpfr(0)
        hbar = mpfr(0)  # alternating harmonic number of index k-1
        for k in range(1, K + 1):
            sign = 1 if k % 2 else -1
            a_k = 2 * sign * (ln2 - hbar) - mpfr(1) / k
            total += a_k * gmpy2.sin(2 * k * x)
            hbar += mpfr(sign) / k
        rhs_v = -total
    with gmpy2.context(precision=64, round=gmpy2.RoundUp):
        slop = mpfr(2) ** (4 - bits) * (1 + abs(lhs_v))
        tail = mpfr(1) / (K + 1) + (8 * K + 16) * mpfr(2) ** (1 - bits)
    lhs = BoundedValue(lhs_v, slop, RIGOROUS)
    rhs = BoundedValue(rhs_v, tail, RIGOROUS)
    return _finish(
        "L2i",
        (("x_num", x_num), ("x_den", x_den), ("K", K)),
        lhs,
        rhs,
        ctx,
        tolerance,
        method="product form vs truncated sine expansion",
        work=K,
        started=started,
    )


def check_L2ii(
    t_pct: int, j: int, ctx: PrecisionContext | None = None, *, tolerance=None
) -> VerificationReport:
    """Generating function of alternating odd harmonics vs Ti_{2j+1}(t)/(1-t^2).

    t enters as a percentage so the parameter stays an integer; the partial
    sum runs far enough that the geometric tail t^(2K+1)/(1-t^2) drops below
    the context target.
    """
    if not 0 < t_pct < 100:
        raise ValueError("need 0 < t_pct < 100")
    if j < 0:
        raise ValueError("need j >= 0")
    ctx = ctx or default_context("L2ii")
    started = time.perf_counter()
    order = 2 * j + 1
    t = Fraction(t_pct, 100)
    inv_factor = 1 / (1 - t * t)  # exact rational
    with ctx.activate(extra_bits=24):
        bits = gmpy2.get_context().precision
        tm = mpfr(gmpy2.mpq(t.numerator, t.denominator))
        t2 = tm * tm
        want = ctx.target_abs_error * (1 - t2) / 8
        K = max(int(gmpy2.ceil(gmpy2.log(want) / (2 * gmpy2.log(tm)))) + 4, 8)
        obar = mpfr(0)
        power = tm
        total = mpfr(0)
        for k in range(1, K + 1):
            sign = 1 if k % 2 else -1
            obar += mpfr(sign) / mpfr(2 * k - 1) ** order
            total += obar * power
            power *= t2
    with gmpy2.context(precision=64, round=gmpy2.RoundUp):
        tail = abs(power) / (1 - t2)  # t^(2K+1)/(1-t^2), since |Obar| <= 1
        slop = (8 * K + 16) * mpfr(2) ** (1 - bits) * (1 + abs(total))
    lhs = BoundedValue(total, tail + slop, RIGOROUS)
    rhs = ti(order, gmpy2.mpq(t.numerator, t.denominator), ctx).scale(inv_factor)
    return _finish(
        "L2ii",
        (("t_pct", t_pct), ("j", j)),
        lhs,
        rhs,
        ctx,
        tolerance,
        method="harmonic power series vs inverse-tangent integral",
        work=K,
        started=started,
    )


def check_L2iii(
    j: int, ctx: PrecisionContext | None = None, *, tolerance=None
) -> VerificationReport:
    """Integral of Ti_{2j+1}(t)/(1+t^2) over [0,1] vs half the beta-pair sum."""
    if j < 0:
        raise ValueError("need j >= 0")
    ctx = ctx or default_context("L2iii")
    started = time.perf_counter()
    order = 2 * j + 1

    def f(t):
        return ti_point(order, t, gmpy2.get_context().precision) / (1 + t * t)

    return _quadrature_check(
        "L2iii",
        (("j", j),),
        f,
        1,
        beta_pair_sum(j, Fraction(1, 2)),
        ctx,
        tolerance,
        method="tanh-sinh quadrature vs beta pairs",
        started=started,
    )


def check_L2iv(
    m: int, ctx: PrecisionContext | None = None, *, tolerance=None
) -> VerificationReport:
    """Moment of ln(sin x)/cos x over [0, pi/2] vs nested beta-pair sums.

    Log-singular at 0 (absorbed by the double-exponential nodes) with a
    removable zero at pi/2 (the stable ln(sin) form keeps the ratio clean).
    """
    if m < 0:
        raise ValueError("need m >= 0")
    ctx = ctx or default_context("L2iv")
    started = time.perf_counter()
    f2m = math.factorial(2 * m)
    terms = []
    for i in range(m + 1):
        power = 2 * m - 2 * i
        c = Fraction(2 * f2m * (-1) ** (i + 1), math.factorial(power) * 2 ** power)
        for k in range(2 * i + 1):
            factors = (beta_factor(k + 1), beta_factor(2 * i - k + 1))
            if power:
                factors += (pi_factor(power),)
            terms.append(Term(c * (-1) ** k, factors))
    rhs_expr = ClosedFormExpr(tuple(terms))

    def f(x):
        return x ** (2 * m) * log_sin(x) / gmpy2.cos(x)

    return _quadrature_check(
        "L2iv",
        (("m", m),),
        f,
        pi_endpoint(ctx),
        rhs_expr,
        ctx,
        tolerance,
        method="tanh-sinh quadrature vs beta-pair pi polynomial",
        started=started,
    )


def check_L3(
    m: int, n: int, ctx: PrecisionContext | None = None, *, tolerance=None
) -> VerificationReport:
    """Moment of cos^(2n-1) x vs the star-sum pi-polynomial closed form."""
    if m < 0 or n < 1:
        raise ValueError("need m >= 0 and n >= 1")
    ctx = ctx or default_context("L3")
    started = time.perf_counter()

    def f(x):
        return x ** (2 * m) * gmpy2.cos(x) ** (2 * n - 1)

    return _quadrature_check(
        "L3",
        (("m", m), ("n", n)),
        f,
        pi_endpoint(ctx),
        rhs_lemma3(m, n),
        ctx,
        tolerance,
        method="tanh-sinh quadrature vs star-sum pi polynomial",
        started=started,
    )


def check_R1(
    m: int, n: int, ctx: PrecisionContext | None = None, *, tolerance=None
) -> VerificationReport:
    """Moment of cos(2nx) over [0, pi/2] vs its odd pi-power sum (empty at m=0)."""
    if m < 0 or n < 1:
        raise ValueError("need m >= 0 and n >= 1")
    ctx = ctx or default_context("R1")
    started = time.perf_counter()
    f2m = math.factorial(2 * m)
    coeffs: dict = {}
    for i in range(1, m + 1):
        # 2^(2i) from the formula and 2^power from (pi/2)^power combine
        # into the constant 2^(2m+1)
        power = 2 * m - 2 * i + 1
        c = Fraction(
            (-1) ** (i + n - 1) * f2m,
            n ** (2 * i) * 2 ** (2 * m + 1) * math.factorial(power),
        )
        coeffs[power] = coeffs.get(power, Fraction(0)) + c

    def f(x):
        return x ** (2 * m) * gmpy2.cos(2 * n * x)

    return _quadrature_check(
        "R1",
        (("m", m), ("n", n)),
        f,
        pi_endpoint(ctx),
        _pi_polynomial(coeffs),
        ctx,
        tolerance,
        method="tanh-sinh quadrature vs pi polynomial",
        started=started,
    )


def check_R2(
    m: int, ctx: PrecisionContext | None = None, *, tolerance=None
) -> VerificationReport:
    """Log-sine moment over [0, pi/2] vs its eta-weighted pi-power sum."""
    if m < 0:
        raise ValueError("need m >= 0")
    ctx = ctx or default_context("R2")
    started = time.perf_counter()
    f2m = math.factorial(2 * m)
    terms = []
    for i in range(m + 1):
        power = 2 * m - 2 * i + 1
        c = Fraction(
            (-1) ** (i + 1) * f2m, 2 ** (2 * m + 1) * math.factorial(power)
        )
        terms.append(Term(c, (eta_factor(2 * i + 1), pi_factor(power))))
    rhs_expr = ClosedFormExpr(tuple(terms))

    def f(x):
        return x ** (2 * m) * log_sin(x)

    return _quadrature_check(
        "R2",
        (("m", m),),
        f,
        pi_endpoint(ctx),
        rhs_expr,
        ctx,
        tolerance,
        method="tanh-sinh quadrature vs eta pi polynomial",
        started=started,
    )


def check_R3(
    m: int, n: int, ctx: PrecisionContext | None = None, *, tolerance=None
) -> VerificationReport:
    """Moment of cos^(2n) x vs the integer-star-sum pi-power closed form."""
    if m < 0 or n < 1:
        raise ValueError("need m >= 0 and n >= 1")
    ctx = ctx or default_context("R3")
    started = time.perf_counter()
    st = exact_state_at(n, depth=m)
    # (2m)! C(2n,n)/4^n; the ratio helper carries an extra 1/n to divide out
    lead = Fraction(math.factorial(2 * m)) / (central_binomial_ratio(n) * n)
    coeffs: dict = {}
    for i in range(m + 1):
        power = 2 * m - 2 * i + 1
        z = Fraction(int(st.zeta_star[i].numerator), int(st.zeta_star[i].denominator))
        c = lead * (-1) ** i * z / (2 ** (2 * m + 1) * math.factorial(power))
        coeffs[power] = coeffs.get(power, Fraction(0)) + c

    def f(x):
        return x ** (2 * m) * gmpy2.cos(x) ** (2 * n)

    return _quadrature_check(
        "R3",
        (("m", m), ("n", n)),
        f,
        pi_endpoint(ctx),
        _pi_polynomial(coeffs),
        ctx,
        tolerance,
        method="tanh-sinh quadrature vs star-sum pi polynomial",
        started=started,
    )
