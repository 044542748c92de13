"""Arbitrary-precision verification of central-binomial star-sum series.

The package streams two Apery-flavored series families (odd-denominator
star sums against 4^n/(n^2 C(2n,n)) weights and integer star sums against
the reciprocal weights), extrapolates their limits, and checks them against
closed forms assembled from pi, Catalan's constant, and Dirichlet beta/eta
values.  A tanh-sinh integrator verifies the companion integral identities,
and exact rational oracles pin down the combinatorial layer.
"""

from .backend import available_backends, default_backend
from .closedform import (
    ClosedFormExpr,
    Term,
    beta_pair_sum,
    central_binomial_ratio,
    corollary_fixture,
    fold_symmetry,
    rhs_gencev,
    rhs_lemma3,
    rhs_theorem1,
)
from .constants import BetaTable, beta, eta, euler_number, ti
from .errors import (
    CapacityError,
    ConsistencyError,
    ExtrapolationError,
    PrecisionError,
    QuadratureError,
    TstarError,
)
from .harmonic import (
    HarmonicState,
    advance,
    exact_state_at,
    initial,
    t_star_bruteforce,
    t_star_poly_check,
    zeta_star_bruteforce,
)
from .precision import BoundedValue, PrecisionContext, make_context
from .quadrature import QuadratureResult, integrate
from .report import VerificationReport
from .series import (
    FamilyKind,
    PartialSumTrace,
    SeriesFamily,
    evaluate_series,
    extend_trace,
    partial_sum,
)

__version__ = "0.1.0"

__all__ = [
    "BetaTable",
    "BoundedValue",
    "CapacityError",
    "ClosedFormExpr",
    "ConsistencyError",
    "ExtrapolationError",
    "FamilyKind",
    "HarmonicState",
    "PartialSumTrace",
    "PrecisionContext",
    "PrecisionError",
    "QuadratureError",
    "QuadratureResult",
    "SeriesFamily",
    "Term",
    "TstarError",
    "VerificationReport",
    "advance",
    "available_backends",
    "beta",
    "beta_pair_sum",
    "central_binomial_ratio",
    "corollary_fixture",
    "default_backend",
    "eta",
    "euler_number",
    "evaluate_series",
    "exact_state_at",
    "extend_trace",
    "fold_symmetry",
    "initial",
    "integrate",
    "make_context",
    "partial_sum",
    "rhs_gencev",
    "rhs_lemma3",
    "rhs_theorem1",
    "t_star_bruteforce",
    "t_star_poly_check",
    "ti",
    "zeta_star_bruteforce",
    "__version__",
]
