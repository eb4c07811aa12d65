# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled backend for elementwise power-series evaluation.

Twin of :mod:`fracinv._kernels_py.series_eval`; the stopping rules and
error estimates are identical, only the looping strategy differs
(per-element C loops instead of masked numpy passes).
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, isfinite

cnp.import_array()

BACKEND_NAME = "compiled"

DEF SPLITTER = 134217729.0  # 2**27 + 1


cdef inline void two_sum(double a, double b, double* s, double* err) nogil:
    cdef double ss = a + b
    cdef double bb = ss - a
    s[0] = ss
    err[0] = (a - (ss - bb)) + (b - bb)


cdef inline void quick_two_sum(double a, double b, double* s, double* err) nogil:
    cdef double ss = a + b
    s[0] = ss
    err[0] = b - (ss - a)


cdef inline void two_prod(double a, double b, double* p, double* err) nogil:
    cdef double pp = a * b
    cdef double t = SPLITTER * a
    cdef double ahi = t - (t - a)
    cdef double alo = a - ahi
    t = SPLITTER * b
    cdef double bhi = t - (t - b)
    cdef double blo = b - bhi
    p[0] = pp
    err[0] = ((ahi * bhi - pp) + ahi * blo + alo * bhi) + alo * blo


cdef inline void dd_add(double xh, double xl, double yh, double yl,
                        double* rh, double* rl) nogil:
    cdef double sh, se
    two_sum(xh, yh, &sh, &se)
    se = se + (xl + yl)
    quick_two_sum(sh, se, rh, rl)


cdef inline void dd_mul(double xh, double xl, double yh, double yl,
                        double* rh, double* rl) nogil:
    cdef double ph, pe
    two_prod(xh, yh, &ph, &pe)
    pe = pe + (xh * yl + xl * yh)
    quick_two_sum(ph, pe, rh, rl)


def series_eval(double[::1] coef_hi, double[::1] coef_lo, object zobj,
                bint use_dd=False, bint asymptotic=False, double tol=1e-14):
    """See fracinv._kernels_py.series_eval for the contract."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] z = np.ascontiguousarray(zobj, dtype=np.float64)
    cdef Py_ssize_t n = z.shape[0]
    cdef Py_ssize_t K = coef_hi.shape[0]

    cdef cnp.ndarray[cnp.float64_t, ndim=1] vals = np.empty(n)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] tails = np.zeros(n)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] nterms = np.zeros(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] maxps = np.zeros(n)

    cdef Py_ssize_t i, k
    cdef double zi, sh, sl, zph, zpl, th, tl, mag, prev1, prev2, maxp, r, tail
    cdef double scale
    cdef double inf = np.inf
    cdef int dec
    cdef bint stopped, live, small_pair

    for i in range(n):
        zi = z[i]
        sh = 0.0
        sl = 0.0
        zph = 1.0
        zpl = 0.0
        dec = 0
        prev1 = inf
        prev2 = inf
        maxp = 0.0
        tail = 0.0
        stopped = False
        for k in range(K):
            if use_dd:
                dd_mul(zph, zpl, coef_hi[k], coef_lo[k], &th, &tl)
            else:
                th = zph * coef_hi[k]
                tl = 0.0
            mag = fabs(th)
            live = mag > 0.0
            if k >= 1:
                scale = tol * fabs(sh)
                small_pair = (mag < scale) and (prev1 < 1e3 * scale)
                if asymptotic:
                    if live and ((mag >= prev1 and mag >= prev2
                                  and isfinite(prev2)) or small_pair):
                        tail = mag
                        nterms[i] = k
                        stopped = True
                        break
                else:
                    if live:
                        if mag < prev1:
                            dec += 1
                        else:
                            dec = 0
                    if live and dec >= 3 and (small_pair or mag < 1e-290):
                        r = mag / prev1 if prev1 > 0.0 else 0.0
                        if r > 0.99:
                            r = 0.99
                        tail = mag / (1.0 - r)
                        nterms[i] = k
                        stopped = True
                        break
            if use_dd:
                dd_add(sh, sl, th, tl, &sh, &sl)
            else:
                sh = sh + th
            if fabs(sh) > maxp:
                maxp = fabs(sh)
            if live:
                prev2 = prev1
                prev1 = mag
            if use_dd:
                dd_mul(zph, zpl, zi, 0.0, &zph, &zpl)
            else:
                zph = zph * zi
        if not stopped:
            tail = prev1 if isfinite(prev1) else 0.0
            nterms[i] = K
        vals[i] = sh + sl
        tails[i] = tail
        maxps[i] = maxp

    return vals, tails, nterms, maxps
