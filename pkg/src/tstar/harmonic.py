"""Streaming odd harmonic numbers and nested star sums.

The objects tracked per index n:

  odd[m]       O_n(m)    = sum_{i<=n} 1/(2i-1)^m
  alt_odd[m]   Obar_n(m) = sum_{i<=n} (-1)^(i-1)/(2i-1)^m
  t_star[j]    sum over n >= k_1 >= ... >= k_j >= 1 of prod 1/(2k_i - 1)^2
  zeta_star[j] same shape with divisors k_i^2 instead of (2k_i - 1)^2

The star sums satisfy a first-column recurrence: the depth-j sum at n equals
the depth-j sum at n-1 plus the depth-(j-1) sum at n divided by the new
largest factor.  advance() applies one such step to every tracked quantity,
so a single pass over n = 1..N yields all values in O(N * depth) operations.
States are immutable; advance returns a new state.

Exact mode keeps every entry as a gmpy2.mpq rational (denominators grow
quickly, hence the cap); floating mode rounds each step at the context's
working precision.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import gmpy2
from gmpy2 import mpfr, mpq

from .errors import CapacityError
from .precision import PrecisionContext

BRUTEFORCE_MAX_N = 30
BRUTEFORCE_MAX_DEPTH = 6
EXACT_CAP_DEFAULT = 200


@dataclass(frozen=True)
class HarmonicState:
    """All tracked harmonic quantities at one index n."""

    n: int
    depth: int
    orders: tuple
    odd: tuple
    alt_odd: tuple
    t_star: tuple
    zeta_star: tuple
    exact: bool
    exact_cap: int = EXACT_CAP_DEFAULT
    ctx: PrecisionContext | None = None

    def __post_init__(self):
        if self.depth < 0 or self.n < 0:
            raise ValueError("depth and n must be non-negative")
        if len(self.t_star) != self.depth + 1 or len(self.zeta_star) != self.depth + 1:
            raise ValueError("star tuples must have depth+1 entries")
        if len(self.odd) != len(self.orders) or len(self.alt_odd) != len(self.orders):
            raise ValueError("odd tuples must match orders")
        if not self.exact and self.ctx is None:
            raise ValueError("floating mode needs a PrecisionContext")

    def odd_harmonic(self, m: int):
        return self.odd[self.orders.index(m)]

    def alt_odd_harmonic(self, m: int):
        return self.alt_odd[self.orders.index(m)]


def initial(
    depth: int,
    orders: tuple = (1, 2, 3),
    *,
    exact: bool = True,
    ctx: PrecisionContext | None = None,
    exact_cap: int = EXACT_CAP_DEFAULT,
) -> HarmonicState:
    """State at n = 0: empty sums are zero, the depth-0 star sums are one."""
    orders = tuple(orders)
    if exact:
        zero, one = mpq(0), mpq(1)
    else:
        if ctx is None:
            raise ValueError("floating mode needs a PrecisionContext")
        with ctx.activate():
            zero, one = mpfr(0), mpfr(1)
    stars = (one,) + (zero,) * depth
    return HarmonicState(
        n=0,
        depth=depth,
        orders=orders,
        odd=(zero,) * len(orders),
        alt_odd=(zero,) * len(orders),
        t_star=stars,
        zeta_star=stars,
        exact=exact,
        exact_cap=exact_cap,
        ctx=ctx,
    )


def advance(state: HarmonicState) -> HarmonicState:
    """Step from index n to n+1."""
    n = state.n + 1
    if state.exact:
        if n > state.exact_cap:
            raise CapacityError(
                f"exact streaming past n={state.exact_cap} needs a larger exact_cap"
            )
        return _advance_values(state, n)
    with state.ctx.activate():
        return _advance_values(state, n)


def _advance_values(state: HarmonicState, n: int) -> HarmonicState:
    one = mpq(1) if state.exact else mpfr(1)
    odd_q = (2 * n - 1) ** 2
    sign = 1 if n % 2 == 1 else -1

    odd = list(state.odd)
    alt = list(state.alt_odd)
    for i, m in enumerate(state.orders):
        inv = one / (2 * n - 1) ** m
        odd[i] = odd[i] + inv
        alt[i] = alt[i] + inv if sign > 0 else alt[i] - inv

    t_star = list(state.t_star)
    z_star = list(state.zeta_star)
    for j in range(1, state.depth + 1):
        # uses the already-updated depth j-1 entry: that is the recurrence
        t_star[j] = t_star[j] + t_star[j - 1] / odd_q
        z_star[j] = z_star[j] + z_star[j - 1] / (n * n)

    return HarmonicState(
        n=n,
        depth=state.depth,
        orders=state.orders,
        odd=tuple(odd),
        alt_odd=tuple(alt),
        t_star=tuple(t_star),
        zeta_star=tuple(z_star),
        exact=state.exact,
        exact_cap=state.exact_cap,
        ctx=state.ctx,
    )


def exact_state_at(n: int, depth: int = 0, orders: tuple = ()) -> HarmonicState:
    """Convenience: exact state after n steps."""
    st = initial(depth, orders, exact=True, exact_cap=max(n, EXACT_CAP_DEFAULT))
    for _ in range(n):
        st = advance(st)
    return st


def _star_bruteforce(n: int, depth: int, weight) -> Fraction:
    if n < 0 or depth < 0:
        raise ValueError("n and depth must be non-negative")
    if n > BRUTEFORCE_MAX_N or depth > BRUTEFORCE_MAX_DEPTH:
        raise CapacityError(
            f"brute force guarded to n <= {BRUTEFORCE_MAX_N}, depth <= {BRUTEFORCE_MAX_DEPTH}"
        )
    total = Fraction(0)
    for combo in itertools.combinations_with_replacement(range(1, n + 1), depth):
        prod = Fraction(1)
        for k in combo:
            prod /= weight(k)
        total += prod
    return total


def t_star_bruteforce(n: int, depth: int) -> Fraction:
    """Nested-enumeration oracle for the odd-denominator star sum."""
    return _star_bruteforce(n, depth, lambda k: (2 * k - 1) ** 2)


def zeta_star_bruteforce(n: int, depth: int) -> Fraction:
    """Nested-enumeration oracle for the integer-denominator star sum."""
    return _star_bruteforce(n, depth, lambda k: k * k)


@dataclass(frozen=True)
class PolyCheckResult:
    n: int
    depth: int
    lhs: Fraction
    rhs: Fraction

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def t_star_poly_check(n: int) -> tuple:
    """Verify the symmetric-function reductions of the star sums, exactly.

    depth 2:  2 t*_n({2}_2) = O_n(2)^2 + O_n(4)
    depth 3:  6 t*_n({2}_3) = O_n(2)^3 + 3 O_n(2) O_n(4) + 2 O_n(6)
    """
    st = initial(3, (2, 4, 6), exact=True, exact_cap=max(n, EXACT_CAP_DEFAULT))
    for _ in range(n):
        st = advance(st)
    o2, o4, o6 = (Fraction(v.numerator, v.denominator) for v in st.odd)
    t2 = Fraction(st.t_star[2].numerator, st.t_star[2].denominator)
    t3 = Fraction(st.t_star[3].numerator, st.t_star[3].denominator)
    return (
        PolyCheckResult(n, 2, t2, (o2 * o2 + o4) / 2),
        PolyCheckResult(n, 3, t3, (o2 ** 3 + 3 * o2 * o4 + 2 * o6) / 6),
    )


def odd_harmonic_exact(n: int, m: int) -> Fraction:
    """Direct exact O_n(m); fine for the small n used in closed forms."""
    return sum(Fraction(1, (2 * i - 1) ** m) for i in range(1, n + 1))


def alt_odd_harmonic_exact(n: int, m: int) -> Fraction:
    """Direct exact Obar_n(m)."""
    return sum(
        Fraction((-1) ** (i - 1), (2 * i - 1) ** m) for i in range(1, n + 1)
    )
