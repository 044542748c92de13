"""Pure-Python summation kernel.

run_stream advances the fused (weight, star-sum, partial-sum) state from
n_start to n_end at a fixed MPFR precision.  The compiled kernel in _accel
performs the exact same sequence of correctly rounded operations, so the two
backends produce bit-identical results; tests assert that.

Family codes:
  0: terms 4^n / (n^2 C(2n,n)) * t*_n({2}_j)   (odd-denominator star sums)
  1: terms C(2n,n) / (n 4^n) * zeta*_n({2}_j)  (integer-denominator star sums)

State convention at index n: star holds the depth 0..j star sums at n,
weight is the n-th weight (unused at n = 0), acc is the partial sum S_n.
"""

from __future__ import annotations

import gmpy2
from gmpy2 import mpfr

BACKEND_NAME = "python"


def run_stream(family, j, n_start, n_end, bits, star_in, weight_in, acc_in, checkpoints):
    """Returns (star_out, weight_out, acc_out, samples with (n, S_n))."""
    if family not in (0, 1):
        raise ValueError(f"unknown family code {family}")
    cps = list(checkpoints)
    idx = 0
    samples = []
    with gmpy2.context(precision=bits):
        star = [mpfr(x) for x in star_in]
        weight = mpfr(weight_in)
        acc = mpfr(acc_in)
        for n in range(n_start + 1, n_end + 1):
            if family == 0:
                if n == 1:
                    weight = mpfr(2)
                else:
                    weight = weight * (2 * (n - 1) * (n - 1))
                    weight = weight / ((2 * n - 1) * n)
                q = (2 * n - 1) * (2 * n - 1)
            else:
                if n == 1:
                    weight = mpfr(1)
                    weight = weight / 2
                else:
                    weight = weight * ((n - 1) * (2 * n - 1))
                    weight = weight / (2 * n * n)
                q = n * n
            for i in range(1, j + 1):
                star[i] = star[i] + star[i - 1] / q
            acc = acc + weight * star[j]
            if idx < len(cps) and n == cps[idx]:
                samples.append((n, acc))
                idx += 1
    return star, weight, acc, samples
