"""Pure numpy backend for elementwise power-series evaluation.

This module is the reference implementation; `fracinv._mlkern` is a
compiled twin with the same entry point and the identical stopping and
error-estimation rules.  Backend selection happens in
:mod:`fracinv.backend`.

Double-double arithmetic follows the classic error-free transforms
(Knuth two-sum, Dekker split/product); no FMA is assumed.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "pure"

_SPLITTER = 134217729.0  # 2**27 + 1


def _two_sum(a, b):
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def _quick_two_sum(a, b):
    # requires |a| >= |b| elementwise
    s = a + b
    return s, b - (s - a)


def _two_prod(a, b):
    p = a * b
    t = _SPLITTER * a
    ahi = t - (t - a)
    alo = a - ahi
    t = _SPLITTER * b
    bhi = t - (t - b)
    blo = b - bhi
    err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, err


def _dd_add(xh, xl, yh, yl):
    sh, se = _two_sum(xh, yh)
    se = se + (xl + yl)
    return _quick_two_sum(sh, se)


def _dd_mul(xh, xl, yh, yl):
    ph, pe = _two_prod(xh, yh)
    pe = pe + (xh * yl + xl * yh)
    return _quick_two_sum(ph, pe)


def series_eval(coef_hi, coef_lo, z, use_dd=False, asymptotic=False, tol=1e-14):
    """Evaluate s(z_i) = sum_k c_k z_i**k elementwise with early termination.

    Parameters
    ----------
    coef_hi, coef_lo : float64 arrays, length K
        Series coefficients as double-double pairs (``coef_lo`` is all
        zeros when only double precision is available).
    z : float64 array
    use_dd : bool
        Accumulate in double-double instead of plain double.
    asymptotic : bool
        Optimal-truncation mode: stop before the first term whose
        magnitude does not decrease, and report that magnitude as the
        tail estimate.  Otherwise a convergent-series rule is used:
        stop once terms have decreased three times in a row and the
        next term is below ``tol`` times the partial sum; the tail is
        bounded by a geometric majorant.

    Exact-zero terms (gamma poles in a coefficient law) are added but
    excluded from the stop bookkeeping, and both stop rules compare
    against the last *two* nonzero magnitudes so that a near-pole dip
    cannot masquerade as convergence or as the start of divergence.

    Returns
    -------
    (values, tails, nterms, max_partial) : arrays over z
        ``tails`` bounds the truncation error of the returned partial
        sum; ``max_partial`` is the largest partial-sum magnitude seen
        (for cancellation accounting by the caller).
    """
    z = np.ascontiguousarray(z, dtype=np.float64)
    n = z.size
    K = coef_hi.shape[0]

    with np.errstate(over="ignore", invalid="ignore", under="ignore"):
        sh = np.zeros(n)
        sl = np.zeros(n)
        zph = np.ones(n)
        zpl = np.zeros(n)
        active = np.ones(n, dtype=bool)
        dec = np.zeros(n, dtype=np.int64)
        prev1 = np.full(n, np.inf)   # last nonzero |term|
        prev2 = np.full(n, np.inf)   # nonzero |term| before that
        tails = np.zeros(n)
        nterms = np.zeros(n, dtype=np.int64)
        maxp = np.zeros(n)

        for k in range(K):
            if not active.any():
                break
            if use_dd:
                th, tl = _dd_mul(zph, zpl,
                                 np.full(n, coef_hi[k]), np.full(n, coef_lo[k]))
            else:
                th = zph * coef_hi[k]
                tl = np.zeros(n)
            mag = np.abs(th)
            live = mag > 0.0

            if k >= 1:
                scale = tol * np.abs(sh)
                small_pair = (mag < scale) & (prev1 < 1e3 * scale)
                if asymptotic:
                    grew = (mag >= prev1) & (mag >= prev2) & np.isfinite(prev2)
                    stop = active & live & (grew | small_pair)
                    tails[stop] = mag[stop]
                else:
                    dec = np.where(live & (mag < prev1), dec + 1,
                                   np.where(live, 0, dec))
                    stop = active & live & (dec >= 3) & \
                        (small_pair | (mag < 1e-290))
                    if stop.any():
                        r = np.clip(np.where(prev1 > 0, mag / prev1, 0.0),
                                    0.0, 0.99)
                        tails[stop] = mag[stop] / (1.0 - r[stop])
                if stop.any():
                    nterms[stop] = k
                    active &= ~stop
                    if not active.any():
                        break

            # accumulate the term for still-active entries
            if use_dd:
                ah, al = _dd_add(sh, sl, th, tl)
            else:
                ah = sh + th
                al = sl
            sh = np.where(active, ah, sh)
            sl = np.where(active, al, sl)
            maxp = np.where(active, np.maximum(maxp, np.abs(sh)), maxp)
            upd = active & live
            prev2 = np.where(upd, prev1, prev2)
            prev1 = np.where(upd, mag, prev1)

            if use_dd:
                zph, zpl = _dd_mul(zph, zpl, z, np.zeros(n))
            else:
                zph = zph * z

        if active.any():
            # coefficient table exhausted before the stopping rule fired
            last = np.where(np.isfinite(prev1), prev1, 0.0)
            tails[active] = last[active]
            nterms[active] = K

    return sh + sl, tails, nterms, maxp
