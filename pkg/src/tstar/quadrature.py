"""Tanh-sinh quadrature on finite intervals.

The substitution x = tanh((pi/2) sinh t) pushes the endpoints to infinity
and makes the transformed integrand decay doubly exponentially, so the
trapezoid rule in t converges at roughly one digit per few nodes even when
the integrand has integrable endpoint singularities (the log-sine integrals
here are the motivating case).

Levels halve the step: level 0 uses t = 0, 1, 2, ...; level l adds the odd
multiples of 2^-l.  Nodes are cached per (precision, level) as offsets
delta = 1 - tanh((pi/2) sinh t) from the endpoint, and abscissas are formed
as a + half*delta and b - half*delta.  Keeping the offset rather than the
abscissa preserves full relative precision next to the endpoints, which is
what a log singularity needs.

The returned error estimate is the last inter-level difference plus a
rounding-noise allowance proportional to the node count; it is a heuristic,
not a proven bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import gmpy2
from gmpy2 import mpfr

from .errors import QuadratureError
from .precision import PrecisionContext

QUAD_EXTRA_BITS = 24
DEFAULT_MAX_LEVELS = 12

_NODE_CACHE: dict = {}


def _t_max(bits: int) -> float:
    # stop once 1 - tanh((pi/2) sinh t) underflows the working precision
    return math.asinh((bits + 8) * math.log(2) / math.pi)


def _level_nodes(bits: int, level: int) -> tuple:
    """New (delta, weight) pairs introduced at this level; level 0 also
    contains the center node (delta == 1)."""
    key = (bits, level)
    if key in _NODE_CACHE:
        return _NODE_CACHE[key]
    tmax = _t_max(bits)
    out = []
    with gmpy2.context(precision=bits):
        half_pi = gmpy2.const_pi() / 2
        h = mpfr(2) ** (-level)
        if level == 0:
            ks = range(0, math.floor(tmax) + 1)
        else:
            ks = range(1, math.floor(tmax / float(h)) + 1, 2)
        for k in ks:
            t = k * h
            u = half_pi * gmpy2.sinh(t)
            delta = 2 / (gmpy2.exp(2 * u) + 1)  # 1 - tanh(u), no cancellation
            w = half_pi * gmpy2.cosh(t) / gmpy2.cosh(u) ** 2
            out.append((delta, w))
    _NODE_CACHE[key] = tuple(out)
    return _NODE_CACHE[key]


@dataclass(frozen=True)
class QuadratureResult:
    value: mpfr
    abs_error_estimate: mpfr
    nodes_used: int
    levels: int
    level_values: tuple = ()


def integrate(
    f,
    a,
    b,
    ctx: PrecisionContext,
    *,
    max_levels: int = DEFAULT_MAX_LEVELS,
    target=None,
) -> QuadratureResult:
    """Integrate f over [a, b] until successive levels agree to the target.

    f gets called with mpfr abscissas strictly inside (a, b) and must return
    a finite mpfr-convertible value; NaN or infinity raises QuadratureError.
    Exhausting max_levels without convergence raises QuadratureError with
    the inter-level differences as diagnostics.
    """
    bits = ctx.working_bits + QUAD_EXTRA_BITS
    goal = ctx.target_abs_error if target is None else target
    nodes_used = 0
    level_values = []
    diffs = []
    with gmpy2.context(precision=bits):
        lo = mpfr(a)
        hi = mpfr(b)
        if not (gmpy2.is_finite(lo) and gmpy2.is_finite(hi) and lo < hi):
            raise ValueError("need finite bounds with a < b")
        half = (hi - lo) / 2

        def sample(x):
            y = mpfr(f(x))
            if not gmpy2.is_finite(y):
                raise QuadratureError(f"integrand returned {y} at x={x}")
            return y

        total = mpfr(0)
        converged = False
        level = 0
        for level in range(max_levels + 1):
            h = mpfr(2) ** (-level)
            new = mpfr(0)
            for delta, w in _level_nodes(bits, level):
                if delta == 1:  # center node, counted once
                    new += w * sample(lo + half)
                    nodes_used += 1
                else:
                    off = half * delta
                    new += w * (sample(lo + off) + sample(hi - off))
                    nodes_used += 2
            total = new if level == 0 else total / 2 + h * new
            level_values.append(total * half)
            if level >= 2:
                diff = abs(level_values[-1] - level_values[-2])
                diffs.append(diff)
                if diff <= mpfr(goal) / 2:
                    converged = True
                    break
        if not converged:
            raise QuadratureError(
                f"no convergence after {max_levels} levels (target {goal})",
                diagnostics=[float(d) for d in diffs],
            )
        value = level_values[-1]
        with gmpy2.context(precision=64, round=gmpy2.RoundUp):
            noise = (nodes_used + 4) * mpfr(2) ** (1 - bits) * (1 + abs(value))
            estimate = diffs[-1] + noise
    return QuadratureResult(
        value=value,
        abs_error_estimate=estimate,
        nodes_used=nodes_used,
        levels=level,
        level_values=tuple(level_values),
    )


def pi_endpoint(ctx: PrecisionContext, num: int = 1, den: int = 2):
    """pi*num/den at integration precision.

    Integration endpoints must carry at least the integrator's working
    precision: a 53-bit pi/2 perturbs the interval by ~1e-16, which shows up
    squared in integrals whose integrand vanishes at that endpoint and
    swamps the real quadrature error.
    """
    with gmpy2.context(precision=ctx.working_bits + QUAD_EXTRA_BITS + 8):
        return gmpy2.const_pi() * num / den


def log_sin(x, bits: int | None = None):
    """log(sin x) for 0 < x < pi, stable at both ends.

    Away from pi/2 the direct form is fine; near pi it switches to the
    complement, and near pi/2 to log1p of a small quantity, so no regime
    loses relative precision.
    """
    ambient = gmpy2.get_context().precision if bits is None else bits
    with gmpy2.context(precision=ambient):
        xm = mpfr(x)
        pi = gmpy2.const_pi()
        if not 0 < xm < pi:
            raise ValueError(f"log_sin needs 0 < x < pi, got {x!r}")
        if xm > pi / 2:
            xm = pi - xm  # sin symmetric about pi/2; subtraction is benign here
        if xm <= 1:
            return gmpy2.log(gmpy2.sin(xm))
        u = pi / 2 - xm
        s = gmpy2.sin(u / 2)
        return gmpy2.log1p(-2 * s * s)
