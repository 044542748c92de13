# cython: language_level=3
"""Compiled summation kernel.

Mirrors _kernel_py.run_stream operation for operation: every MPFR call here
corresponds to one correctly rounded gmpy2 operation in the Python kernel,
at the same precision and in the same order, so results are bit-identical.

Links against the MPFR library bundled with gmpy2 (see setup.py), which
keeps a single MPFR instance in the process.
"""

from gmpy2 cimport *
from libc.stdlib cimport free, malloc

import_gmpy2()

cdef extern from "mpfr.h":
    void mpfr_init2(mpfr_ptr, mpfr_prec_t)
    void mpfr_clear(mpfr_ptr)
    int mpfr_set_ui(mpfr_ptr, unsigned long, mpfr_rnd_t)
    int mpfr_add(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)
    int mpfr_mul(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)
    int mpfr_div(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)
    int mpfr_mul_ui(mpfr_ptr, mpfr_srcptr, unsigned long, mpfr_rnd_t)
    int mpfr_div_ui(mpfr_ptr, mpfr_srcptr, unsigned long, mpfr_rnd_t)

BACKEND_NAME = "compiled"


def run_stream(int family, int j, unsigned long n_start, unsigned long n_end,
               long bits, star_in, weight_in, acc_in, checkpoints):
    """Same contract as _kernel_py.run_stream."""
    if family not in (0, 1):
        raise ValueError(f"unknown family code {family}")
    if len(star_in) != j + 1:
        raise ValueError("star state must have j+1 entries")

    cdef unsigned long n, q
    cdef int i
    cdef mpfr_t *star
    cdef mpfr_t weight, acc, tmp
    cdef mpfr obj

    cps = list(checkpoints)
    samples = []
    cdef Py_ssize_t idx = 0, n_cps = len(cps)
    cdef unsigned long next_cp = cps[0] if n_cps else 0

    star = <mpfr_t *> malloc((j + 1) * sizeof(mpfr_t))
    if star == NULL:
        raise MemoryError
    for i in range(j + 1):
        mpfr_init2(star[i], bits)
    mpfr_init2(weight, bits)
    mpfr_init2(acc, bits)
    mpfr_init2(tmp, bits)
    try:
        for i in range(j + 1):
            obj = <mpfr?> star_in[i]
            mpfr_set(star[i], obj.f, MPFR_RNDN)
        obj = <mpfr?> weight_in
        mpfr_set(weight, obj.f, MPFR_RNDN)
        obj = <mpfr?> acc_in
        mpfr_set(acc, obj.f, MPFR_RNDN)

        for n in range(n_start + 1, n_end + 1):
            if family == 0:
                if n == 1:
                    mpfr_set_ui(weight, 2, MPFR_RNDN)
                else:
                    mpfr_mul_ui(weight, weight, 2 * (n - 1) * (n - 1), MPFR_RNDN)
                    mpfr_div_ui(weight, weight, (2 * n - 1) * n, MPFR_RNDN)
                q = (2 * n - 1) * (2 * n - 1)
            else:
                if n == 1:
                    mpfr_set_ui(weight, 1, MPFR_RNDN)
                    mpfr_div_ui(weight, weight, 2, MPFR_RNDN)
                else:
                    mpfr_mul_ui(weight, weight, (n - 1) * (2 * n - 1), MPFR_RNDN)
                    mpfr_div_ui(weight, weight, 2 * n * n, MPFR_RNDN)
                q = n * n
            for i in range(1, j + 1):
                mpfr_div_ui(tmp, star[i - 1], q, MPFR_RNDN)
                mpfr_add(star[i], star[i], tmp, MPFR_RNDN)
            mpfr_mul(tmp, weight, star[j], MPFR_RNDN)
            mpfr_add(acc, acc, tmp, MPFR_RNDN)
            if idx < n_cps and n == next_cp:
                samples.append((n, GMPy_MPFR_From_mpfr(acc)))
                idx += 1
                if idx < n_cps:
                    next_cp = cps[idx]

        star_out = [GMPy_MPFR_From_mpfr(star[i]) for i in range(j + 1)]
        weight_out = GMPy_MPFR_From_mpfr(weight)
        acc_out = GMPy_MPFR_From_mpfr(acc)
    finally:
        for i in range(j + 1):
            mpfr_clear(star[i])
        free(star)
        mpfr_clear(weight)
        mpfr_clear(acc)
        mpfr_clear(tmp)

    return star_out, weight_out, acc_out, samples
