"""Symbolic right-hand sides built from beta, eta, pi and Catalan factors.

A ClosedFormExpr is a sum of terms; each term is an exact rational
coefficient times a product of factors.  Factors are beta(m), eta(s), pi^k,
or G (Catalan's constant, evaluated as beta(2)).  Construction normalizes
factor order inside a term and term order inside an expression, so two
expressions that were assembled differently but contain the same terms
compare equal after merging.

Serialized text follows this grammar (round numbers, no floats):

    expr   :=  term ((' + ' | ' - ') term)*
    term   :=  coeff ('*' factor)*
    coeff  :=  integer | integer '/' integer
    factor :=  'beta(' int ')' | 'eta(' int ')' | 'pi' ['^' int] | 'G' ['^' int]

Example: 16*beta(1)*beta(3) - 8*G^2.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from gmpy2 import mpfr

from .constants import beta, eta, pi_value
from .harmonic import exact_state_at
from .precision import BoundedValue, PrecisionContext


class Kind(enum.Enum):
    PI = "pi"
    CATALAN = "G"
    BETA = "beta"
    ETA = "eta"


_KIND_RANK = {Kind.PI: 0, Kind.CATALAN: 1, Kind.BETA: 2, Kind.ETA: 3}


@dataclass(frozen=True)
class Factor:
    kind: Kind
    arg: int = 0

    def key(self):
        return (_KIND_RANK[self.kind], self.arg)

    def text(self) -> str:
        if self.kind is Kind.PI:
            return "pi" if self.arg == 1 else f"pi^{self.arg}"
        if self.kind is Kind.CATALAN:
            return "G"
        return f"{self.kind.value}({self.arg})"


def pi_factor(k: int) -> Factor:
    if k < 1:
        raise ValueError("pi exponent must be >= 1")
    return Factor(Kind.PI, k)


def beta_factor(m: int) -> Factor:
    if m < 1:
        raise ValueError("beta order must be >= 1")
    return Factor(Kind.BETA, m)


def eta_factor(s: int) -> Factor:
    if s < 1:
        raise ValueError("eta order must be >= 1")
    return Factor(Kind.ETA, s)


CATALAN = Factor(Kind.CATALAN, 0)


@dataclass(frozen=True)
class Term:
    coeff: Fraction
    factors: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        object.__setattr__(
            self, "factors", tuple(sorted(self.factors, key=Factor.key))
        )

    def key(self):
        return (tuple(f.key() for f in self.factors), self.coeff)

    def text(self) -> str:
        parts = []
        for fac, group in itertools.groupby(self.factors):
            power = len(list(group))
            t = fac.text()
            if power > 1:
                if fac.kind is Kind.PI:
                    raise ValueError("pi powers belong in the factor argument")
                t = f"{t}^{power}"
            parts.append(t)
        coeff = abs(self.coeff)
        if not parts:
            return str(coeff)
        if coeff == 1:
            return "*".join(parts)
        return "*".join([str(coeff)] + parts)


@dataclass(frozen=True)
class ClosedFormExpr:
    terms: tuple = ()

    def __post_init__(self):
        object.__setattr__(
            self, "terms", tuple(sorted(self.terms, key=Term.key))
        )

    def merged(self) -> "ClosedFormExpr":
        """Sum coefficients of identical factor products, drop zeros."""
        out = []
        for factors, group in itertools.groupby(self.terms, key=lambda t: t.factors):
            coeff = sum(t.coeff for t in group)
            if coeff != 0:
                out.append(Term(coeff, factors))
        return ClosedFormExpr(tuple(out))

    def __eq__(self, other):
        if not isinstance(other, ClosedFormExpr):
            return NotImplemented
        return self.merged().terms == other.merged().terms

    def __hash__(self):
        return hash(self.merged().terms)

    def __add__(self, other: "ClosedFormExpr") -> "ClosedFormExpr":
        return ClosedFormExpr(self.terms + other.terms)

    def scale(self, coeff) -> "ClosedFormExpr":
        q = Fraction(coeff)
        return ClosedFormExpr(tuple(Term(t.coeff * q, t.factors) for t in self.terms))

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for i, t in enumerate(self.terms):
            if i == 0:
                out.append(("-" if t.coeff < 0 else "") + t.text())
            else:
                out.append((" - " if t.coeff < 0 else " + ") + t.text())
        return "".join(out)

    def evaluate(self, ctx: PrecisionContext) -> BoundedValue:
        """Numeric value with a propagated error bound; factors are looked up
        once per distinct (kind, arg)."""
        cache: dict = {}

        def factor_value(f: Factor) -> BoundedValue:
            k = (f.kind, f.arg)
            if k not in cache:
                if f.kind is Kind.PI:
                    cache[k] = pi_value(ctx).pow_int(f.arg)
                elif f.kind is Kind.CATALAN:
                    cache[k] = beta(2, ctx)
                elif f.kind is Kind.BETA:
                    cache[k] = beta(f.arg, ctx)
                else:
                    cache[k] = eta(f.arg, ctx)
            return cache[k]

        with ctx.activate():
            total = BoundedValue.exact(mpfr(0))
        for t in self.terms:
            with ctx.activate():
                acc = BoundedValue.exact(mpfr(1))
            for f in t.factors:
                acc = acc * factor_value(f)
            total = total + acc.scale(t.coeff)
        return total


def beta_pair_sum(j: int, coeff) -> ClosedFormExpr:
    """coeff * sum_{k=0}^{2j} (-1)^k beta(k+1) beta(2j-k+1), term by term."""
    if j < 0:
        raise ValueError("j must be >= 0")
    q = Fraction(coeff)
    terms = tuple(
        Term((-1) ** k * q, (beta_factor(k + 1), beta_factor(2 * j - k + 1)))
        for k in range(2 * j + 1)
    )
    return ClosedFormExpr(terms)


def rhs_theorem1(j: int) -> ClosedFormExpr:
    """Right side of the central-binomial t-star identity: 2j+1 beta-pair
    terms with coefficient 8, deliberately left unmerged."""
    return beta_pair_sum(j, 8)


def fold_symmetry(j: int) -> ClosedFormExpr:
    """Same value as rhs_theorem1(j) using the k <-> 2j-k symmetry: j doubled
    terms plus the central square, j+1 terms total."""
    if j < 0:
        raise ValueError("j must be >= 0")
    terms = [
        Term(Fraction(16) * (-1) ** k, (beta_factor(k + 1), beta_factor(2 * j - k + 1)))
        for k in range(j)
    ]
    terms.append(Term(Fraction(8) * (-1) ** j, (beta_factor(j + 1), beta_factor(j + 1))))
    return ClosedFormExpr(tuple(terms))


def rhs_gencev(j: int) -> ClosedFormExpr:
    """Right side of the central-binomial zeta-star identity: 2 eta(2j+1)."""
    if j < 0:
        raise ValueError("j must be >= 0")
    return ClosedFormExpr((Term(Fraction(2), (eta_factor(2 * j + 1),)),))


def central_binomial_ratio(n: int) -> Fraction:
    """4^n / (n * C(2n, n)) as an exact rational."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Fraction(4 ** n, n * math.comb(2 * n, n))


def rhs_lemma3(m: int, n: int) -> ClosedFormExpr:
    """Closed form of int_0^(pi/2) x^(2m) cos(x)^(2n-1) dx:

        (2m)!/2 * 4^n/(n C(2n,n)) *
            sum_{i=0}^m (-1)^i t*_n({2}_i) (pi/2)^(2m-2i) / (2m-2i)!

    The star-sum values enter as exact rationals, so the result is a pure
    pi-polynomial with rational coefficients.
    """
    if m < 0 or n < 1:
        raise ValueError("need m >= 0 and n >= 1")
    st = exact_state_at(n, depth=m)
    lead = Fraction(math.factorial(2 * m), 2) * central_binomial_ratio(n)
    terms = []
    for i in range(m + 1):
        t_val = Fraction(st.t_star[i].numerator, st.t_star[i].denominator)
        power = 2 * m - 2 * i
        coeff = lead * (-1) ** i * t_val / (math.factorial(power) * 2 ** power)
        factors = (pi_factor(power),) if power else ()
        terms.append(Term(coeff, factors))
    return ClosedFormExpr(tuple(terms))


def corollary_fixture(i: int) -> tuple:
    """Pairs (full beta-pair form, reduced form) for depths j = i-1.

    The reduced forms collapse odd-order beta values through their
    Euler-number closed forms into pure pi powers where possible.
    """
    if i == 1:
        reduced = ClosedFormExpr((Term(Fraction(1, 2), (pi_factor(2),)),))
    elif i == 2:
        reduced = ClosedFormExpr(
            (
                Term(Fraction(1, 8), (pi_factor(4),)),
                Term(Fraction(-8), (CATALAN, CATALAN)),
            )
        )
    elif i == 3:
        reduced = ClosedFormExpr(
            (
                Term(Fraction(1, 48), (pi_factor(6),)),
                Term(Fraction(-16), (CATALAN, beta_factor(4))),
            )
        )
    elif i == 4:
        reduced = ClosedFormExpr(
            (
                Term(Fraction(17, 5760), (pi_factor(8),)),
                Term(Fraction(-16), (CATALAN, beta_factor(6))),
                Term(Fraction(-8), (beta_factor(4), beta_factor(4))),
            )
        )
    else:
        raise ValueError(f"reduced forms are catalogued for i in 1..4, got {i}")
    return rhs_theorem1(i - 1), reduced
