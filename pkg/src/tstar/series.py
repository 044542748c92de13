"""Central-binomial series over star sums: streaming partial sums and
sequence extrapolation.

Two families are summed:

  TSTAR:     sum_n 4^n / (n^2 C(2n,n)) * t*_n({2}_j)
  ZETASTAR:  sum_n C(2n,n) / (n 4^n) * zeta*_n({2}_j)

Weights follow one-step ratio recurrences, and the star sums follow the
first-column recurrence from the harmonic module, so the partial sum S_N
costs O(N * j) MPFR operations.  The kernels in _kernel_py/_accel run that
fused loop; this module owns checkpointing, precision policy, and the tail
extrapolation.

Both families approach their limits like c/sqrt(N): the weights behave as
n^(-3/2) resp. n^(-1/2) times bounded star factors, leaving a tail of the
form N^(-1/2) * (A0 + A1/N + A2/N^2 + ...).  Eliminating successive odd
powers of 1/sqrt(N) across geometric checkpoints (Richardson style) turns a
handful of partial sums into a limit estimate good to dozens of digits; the
reported bound is the difference of the last two elimination stages plus a
rounding-noise allowance, and is heuristic by nature.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import gmpy2
from gmpy2 import mpfr

from .backend import kernel_for
from .errors import CapacityError, ExtrapolationError, PrecisionError
from .precision import HEURISTIC, BoundedValue, PrecisionContext

MAX_DEPTH = 6
MAX_INDEX = 2 ** 30  # weight updates must fit unsigned longs in the kernels
EXTRA_SUM_BITS = 48  # headroom over the context for accumulated rounding


class FamilyKind(enum.Enum):
    TSTAR = 0
    ZETASTAR = 1

    @property
    def identity_id(self) -> str:
        return "theorem1" if self is FamilyKind.TSTAR else "gencev"


@dataclass(frozen=True)
class SeriesFamily:
    kind: FamilyKind
    depth: int

    def __post_init__(self):
        if not isinstance(self.depth, int) or self.depth < 0:
            raise ValueError(f"depth must be a non-negative int, got {self.depth!r}")
        if self.depth > MAX_DEPTH:
            raise CapacityError(f"depth {self.depth} beyond supported maximum {MAX_DEPTH}")


def weight_exact(kind: FamilyKind, n: int) -> Fraction:
    """Exact n-th weight, for oracle tests and small-n spot checks."""
    if n < 1:
        raise ValueError("weights start at n = 1")
    c = math.comb(2 * n, n)
    if kind is FamilyKind.TSTAR:
        return Fraction(4 ** n, n * n * c)
    return Fraction(c, n * 4 ** n)


def next_weight(kind: FamilyKind, w, n: int):
    """One ratio step w_n -> w_(n+1) at ambient precision (the kernels inline
    this same update)."""
    if kind is FamilyKind.TSTAR:
        return w * (2 * n * n) / ((2 * n + 1) * (n + 1))
    return w * (n * (2 * n + 1)) / (2 * (n + 1) * (n + 1))


@dataclass(frozen=True)
class PartialSumTrace:
    """Checkpointed partial sums plus the kernel state needed to resume."""

    family: SeriesFamily
    bits: int
    checkpoints: tuple  # ((n, S_n), ...) ascending in n
    final_state: tuple  # (star tuple, weight, acc, n_end)
    backend: str

    def __post_init__(self):
        ns = [n for n, _ in self.checkpoints]
        if ns != sorted(set(ns)) or (ns and ns[0] < 1):
            raise ValueError("checkpoints must be ascending, unique, and >= 1")

    @property
    def n_end(self) -> int:
        return self.final_state[3]


def default_checkpoints(n_max: int) -> tuple:
    """n_max, n_max/2, n_max/4, ... down to 1 (ascending)."""
    out = []
    cur = n_max
    while cur >= 1:
        out.append(cur)
        if cur == 1:
            break
        cur //= 2
    return tuple(reversed(out))


def _sum_bits(ctx: PrecisionContext, n_max: int) -> int:
    bits = ctx.working_bits + EXTRA_SUM_BITS
    # accumulated-rounding model: a few rounded ops per index, each at most
    # one ulp of a bounded accumulator
    with gmpy2.context(precision=64, round=gmpy2.RoundUp):
        noise = 8 * mpfr(n_max) * mpfr(2) ** (1 - bits)
        if noise > ctx.target_abs_error / 4:
            raise PrecisionError(
                f"context too coarse for N={n_max}: rounding model {noise} "
                f"vs target {ctx.target_abs_error}"
            )
    return bits


def partial_sum(
    family: SeriesFamily,
    n_max: int,
    ctx: PrecisionContext,
    *,
    checkpoints=None,
    backend: str | None = None,
) -> PartialSumTrace:
    """Stream the series to n_max, recording S_n at each checkpoint."""
    if not isinstance(n_max, int) or n_max < 1:
        raise ValueError(f"n_max must be a positive int, got {n_max!r}")
    if n_max > MAX_INDEX:
        raise CapacityError(f"n_max {n_max} beyond supported maximum {MAX_INDEX}")
    if checkpoints is None:
        checkpoints = default_checkpoints(n_max)
    else:
        checkpoints = tuple(sorted(set(int(c) for c in checkpoints)))
        if not checkpoints or checkpoints[0] < 1 or checkpoints[-1] > n_max:
            raise ValueError("checkpoints must lie in 1..n_max")
    bits = _sum_bits(ctx, n_max)
    kern = kernel_for(backend)
    with gmpy2.context(precision=bits):
        star0 = [mpfr(1)] + [mpfr(0)] * family.depth
        zero = mpfr(0)
    star, weight, acc, samples = kern.run_stream(
        family.kind.value, family.depth, 0, n_max, bits, star0, zero, zero, checkpoints
    )
    return PartialSumTrace(
        family=family,
        bits=bits,
        checkpoints=tuple(samples),
        final_state=(tuple(star), weight, acc, n_max),
        backend=kern.BACKEND_NAME,
    )


def extend_trace(trace: PartialSumTrace, n_new: int) -> PartialSumTrace:
    """Resume a trace to a larger index, adding one checkpoint at n_new."""
    star, weight, acc, n_end = trace.final_state
    if n_new <= n_end:
        raise ValueError(f"extension target {n_new} not beyond current end {n_end}")
    if n_new > MAX_INDEX:
        raise CapacityError(f"n_new {n_new} beyond supported maximum {MAX_INDEX}")
    kern = kernel_for(trace.backend)
    star2, weight2, acc2, samples = kern.run_stream(
        trace.family.kind.value,
        trace.family.depth,
        n_end,
        n_new,
        trace.bits,
        list(star),
        weight,
        acc,
        (n_new,),
    )
    return PartialSumTrace(
        family=trace.family,
        bits=trace.bits,
        checkpoints=trace.checkpoints + tuple(samples),
        final_state=(tuple(star2), weight2, acc2, n_new),
        backend=trace.backend,
    )


def extrapolate(trace: PartialSumTrace, *, min_index: int = 8) -> BoundedValue:
    """Estimate the series limit from checkpointed partial sums.

    Eliminates the odd-power tail N^(-1/2), N^(-3/2), ... across the
    checkpoints.  The bound is |last stage - previous stage| plus a rounding
    allowance and is heuristic; non-convergence (stage differences growing
    well above the noise floor) raises ExtrapolationError.
    """
    pts = [(n, s) for n, s in trace.checkpoints if n >= min_index]
    if len(pts) < 4:
        raise ValueError("extrapolation needs at least 4 checkpoints (after the "
                         f"min_index={min_index} cut); have {len(pts)}")
    work_bits = trace.bits + 16
    with gmpy2.context(precision=work_bits):
        xs = [1 / gmpy2.sqrt(mpfr(n)) for n, _ in pts]
        row = [s for _, s in pts]
        diag = [row[-1]]
        stage = 0
        while len(row) > 1:
            stage += 1
            p = 2 * stage - 1
            nxt = []
            for i in range(len(row) - 1):
                a = xs[i] ** p
                b = xs[i + 1] ** p
                nxt.append((a * row[i + 1] - b * row[i]) / (a - b))
            row = nxt
            xs = xs[1:]
            diag.append(row[-1])
        diffs = [abs(diag[k] - diag[k - 1]) for k in range(1, len(diag))]
        scale = max(abs(s) for _, s in pts) + 1
        noise = scale * mpfr(2) ** (1 - trace.bits) * mpfr(5) ** min(stage, 40)
        if (
            len(diffs) >= 3
            and diffs[-1] > diffs[-2] > diffs[-3]
            and diffs[-1] > 10_000 * noise
            and diffs[-1] > 100 * min(diffs)
        ):
            raise ExtrapolationError(
                "elimination stages diverge; tail model does not fit",
                diagnostics=diffs,
            )
        value = diag[-1]
        bound = diffs[-1] + noise
    return BoundedValue(value, bound, HEURISTIC)


def evaluate_series(
    family: SeriesFamily,
    ctx: PrecisionContext,
    *,
    backend: str | None = None,
    max_extensions: int = 24,
) -> tuple:
    """Adaptive evaluation: extend the checkpoint schedule until the
    extrapolation bound meets the context target.

    Returns (BoundedValue, PartialSumTrace).  The schedule is a function of
    the context alone, so results are reproducible bit for bit.
    """
    with gmpy2.context(precision=64):
        digits = float(-gmpy2.log10(ctx.target_abs_error))
    levels = max(8, math.ceil(digits / 3) + 5)
    n0 = 64
    trace = partial_sum(
        family,
        n0 * 2 ** (levels - 1),
        ctx,
        checkpoints=[n0 * 2 ** i for i in range(levels)],
        backend=backend,
    )
    for _ in range(max_extensions + 1):
        est = extrapolate(trace)
        if est.abs_error_bound <= ctx.target_abs_error:
            return est, trace
        trace = extend_trace(trace, trace.n_end * 2)
    raise ExtrapolationError(
        f"bound still {est.abs_error_bound} after {max_extensions} extensions "
        f"(target {ctx.target_abs_error})"
    )


def fit_tail_exponent(rows) -> float:
    """Least-squares slope of log|error| against log N; rows are (N, err)
    pairs with positive err."""
    pts = [(math.log(n), math.log(float(e))) for n, e in rows if e > 0]
    if len(pts) < 2:
        raise ValueError("need at least two positive-error rows to fit")
    mx = sum(x for x, _ in pts) / len(pts)
    my = sum(y for _, y in pts) / len(pts)
    num = sum((x - mx) * (y - my) for x, y in pts)
    den = sum((x - mx) ** 2 for x, _ in pts)
    return num / den
