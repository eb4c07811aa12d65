"""Error-controlled Mittag-Leffler type functions and the gamma function.

Evaluation strategy for the two-parameter function on the real line:

* ``z >= 0``: Taylor series (all terms share a sign, no cancellation).
* ``-x_switch <= z < 0``: Taylor series with a precision ladder.  Plain
  doubles are used while the predicted cancellation is harmless, then
  double-double accumulation with coefficient tables built in exact
  multiprecision, and finally (for ``0 < alpha < 1``) a real-axis
  integral representation of the function once the cancellation exceeds
  what a double-double mantissa can absorb.
* ``z < -x_switch``: algebraic asymptotic expansion with optimal
  truncation; for ``alpha >= 4/3`` the pair of oscillatory-exponential
  contributions present on the negative axis is added in closed form,
  and for ``alpha == beta == 1`` the expansion degenerates to the exact
  ``exp(z)``.

``x_switch`` is 15 for ``alpha <= 1``.  For ``1 < alpha < 2`` the series
window is widened to ``38**alpha`` (the cancellation there still fits in
double-double, while the algebraic expansion near ``|z| = 15`` is poor).

The three-parameter (Kilbas-Saigo type) function has no usable
asymptotic machinery here; it gets the same double / double-double
ladder plus an exact multiprecision fallback whose working precision is
sized from the predicted cancellation.

Every evaluation reports ``est_abs_error``: the geometric-majorant tail
bound of the returned partial sum plus a roundoff floor proportional to
the largest intermediate partial sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath as mp
import numpy as np
from scipy import integrate
from scipy import special as sc

from .backend import series_eval
from .errors import AccuracyError, DomainError

_D_EPS = 2.220446049250313e-16
_DD_EPS = 4.93e-32
_TARGET = 2e-13            # internal accuracy goal per evaluation
_SERIES_TOL_D = 1e-14      # term/partial-sum stopping ratio, double pass
_SERIES_TOL_DD = 3e-31     # ditto for the double-double pass
_DECAY_D = 60.0            # nats below the peak before stopping is possible
_DECAY_DD = 130.0
_X_SWITCH = 15.0
_MP_MAX_LOGCANCEL = 25000.0


@dataclass(frozen=True)
class MLParams:
    """Parameters of the two-parameter Mittag-Leffler function."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (np.isfinite(self.alpha) and self.alpha > 0):
            raise DomainError(f"alpha must be positive, got {self.alpha}")
        if not np.isfinite(self.beta):
            raise DomainError(f"beta must be finite, got {self.beta}")


@dataclass(frozen=True)
class GenMLParams:
    """Parameters of the three-parameter generalized Mittag-Leffler function."""

    alpha: float
    m: float
    n: float

    def __post_init__(self):
        if not (np.isfinite(self.alpha) and self.alpha > 0):
            raise DomainError(f"alpha must be positive, got {self.alpha}")
        if not (np.isfinite(self.m) and self.m > 0):
            raise DomainError(f"m must be positive, got {self.m}")
        if not np.isfinite(self.n):
            raise DomainError(f"n must be finite, got {self.n}")
        # existence: alpha*(j*m + n) must avoid negative integers; only
        # finitely many j can give a negative argument
        j = 0
        while True:
            a = self.alpha * (j * self.m + self.n)
            if a >= -1e-12:
                break
            if abs(a - round(a)) < 1e-9:
                raise DomainError(
                    f"alpha*(j*m+n) = {a} hits a negative integer at j={j}")
            j += 1


@dataclass(frozen=True)
class EvalResult:
    """Value with an upper bound on its absolute error."""

    value: float
    est_abs_error: float
    terms_used: int


def gamma_fn(x: float) -> float:
    """Gamma function with explicit pole detection.

    Relies on the C library implementation, which is well below the
    1e-13 relative-error budget away from the poles.
    """
    if x <= 0 and x == math.floor(x):
        raise DomainError(f"gamma pole at x = {x}")
    return math.gamma(x)


def log_gamma(x: float) -> float:
    """log |Gamma(x)|, companion for internal scaling work."""
    if x <= 0 and x == math.floor(x):
        raise DomainError(f"gamma pole at x = {x}")
    return math.lgamma(x)


# ---------------------------------------------------------------------------
# coefficient tables
# ---------------------------------------------------------------------------

class _SeriesTable:
    """Grow-only cache of series coefficients for one parameter set.

    ``kind`` selects the coefficient law:

    * ``"ml"``      : c_k = 1/Gamma(alpha k + beta)
    * ``"mlderiv"`` : c_k = (k+d)!/k! / Gamma(alpha (k+d) + beta)
    * ``"genml"``   : c_0 = 1, c_k = prod_{j<k} G(a_j)/G(a_j + alpha),
                      a_j = alpha (j m + n) + 1
    """

    def __init__(self, kind, params):
        self.kind = kind
        self.params = params
        self._dbl = None      # (hi, lo) float64 arrays
        self._dd = None
        self._thresholds = {}

    # -- log magnitudes (screening) -------------------------------------
    def logc(self, K):
        k = np.arange(K, dtype=np.float64)
        if self.kind == "ml":
            alpha, beta = self.params
            with np.errstate(all="ignore"):
                return -sc.gammaln(alpha * k + beta)
        if self.kind == "mlderiv":
            alpha, beta, d = self.params
            with np.errstate(all="ignore"):
                return (sc.gammaln(k + d + 1) - sc.gammaln(k + 1)
                        - sc.gammaln(alpha * (k + d) + beta))
        alpha, m, n = self.params
        j = np.arange(max(K - 1, 0), dtype=np.float64)
        a = alpha * (j * m + n) + 1.0
        b = a + alpha
        with np.errstate(all="ignore"):
            steps = sc.gammaln(a) - sc.gammaln(b)
        out = np.empty(K)
        out[0] = 0.0
        if K > 1:
            out[1:] = np.cumsum(steps)
        return out

    # -- double-precision coefficients -----------------------------------
    def coef_double(self, K):
        if self._dbl is None or self._dbl[0].size < K:
            k = np.arange(K, dtype=np.float64)
            if self.kind == "ml":
                alpha, beta = self.params
                hi = sc.rgamma(alpha * k + beta)
            elif self.kind == "mlderiv":
                alpha, beta, d = self.params
                arg = alpha * (k + d) + beta
                with np.errstate(all="ignore"):
                    hi = np.exp(sc.gammaln(k + d + 1) - sc.gammaln(k + 1)) \
                        * sc.rgamma(arg)
            else:
                alpha, m, n = self.params
                j = np.arange(max(K - 1, 0), dtype=np.float64)
                a = alpha * (j * m + n) + 1.0
                b = a + alpha
                with np.errstate(all="ignore"):
                    steps = sc.gammaln(a) - sc.gammaln(b)
                    signs = sc.gammasgn(a) * sc.gammasgn(b)
                hi = np.empty(K)
                hi[0] = 1.0
                if K > 1:
                    hi[1:] = np.cumprod(signs) * np.exp(np.cumsum(steps))
            self._dbl = (np.ascontiguousarray(hi), np.zeros(K))
        hi, lo = self._dbl
        return hi[:K], lo[:K]

    # -- double-double coefficients via exact multiprecision -------------
    def coef_dd(self, K):
        if self._dd is None or self._dd[0].size < K:
            hi = np.empty(K)
            lo = np.empty(K)
            with mp.workdps(44):
                if self.kind == "ml":
                    alpha, beta = self.params
                    a = mp.mpf(alpha)
                    b = mp.mpf(beta)
                    for k in range(K):
                        c = mp.rgamma(a * k + b)
                        h = float(c)
                        hi[k] = h
                        lo[k] = float(c - h)
                elif self.kind == "mlderiv":
                    alpha, beta, d = self.params
                    a = mp.mpf(alpha)
                    b = mp.mpf(beta)
                    for k in range(K):
                        c = (mp.gamma(k + d + 1) / mp.gamma(k + 1)
                             * mp.rgamma(a * (k + d) + b))
                        h = float(c)
                        hi[k] = h
                        lo[k] = float(c - h)
                else:
                    alpha, m, n = self.params
                    al = mp.mpf(alpha)
                    mm = mp.mpf(m)
                    nn = mp.mpf(n)
                    c = mp.mpf(1)
                    hi[0] = 1.0
                    lo[0] = 0.0
                    for k in range(1, K):
                        aj = al * (mm * (k - 1) + nn) + 1
                        c *= mp.gamma(aj) / mp.gamma(aj + al)
                        h = float(c)
                        hi[k] = h
                        lo[k] = float(c - h)
            self._dd = (hi, lo)
        hi, lo = self._dd
        return hi[:K], lo[:K]

    # -- screening -------------------------------------------------------
    def scan(self, x, decay):
        """Peak log term and the table length needed at argument |z| = x."""
        if x <= 0.0:
            return 0.0, 8
        lnx = math.log(x)
        K = 64
        while True:
            lt = self.logc(K) + np.arange(K) * lnx
            lt = np.where(np.isfinite(lt), lt, -np.inf)
            jmax = int(np.argmax(lt))
            peak = float(lt[jmax])
            deep = np.nonzero((np.arange(K) > jmax) & (lt < peak - decay))[0]
            if deep.size:
                return peak, int(deep[0]) + 8
            if K >= 1 << 21:
                raise AccuracyError(
                    f"series for {self.kind}{self.params} needs more than "
                    f"{K} terms at |z|={x}")
            K *= 2

    def xmax_for(self, log_limit, xcap):
        """Largest x with peak log term <= log_limit (monotone bisection)."""
        key = (round(log_limit, 6), round(xcap, 6))
        if key not in self._thresholds:
            if self.scan(xcap, 1.0)[0] <= log_limit:
                self._thresholds[key] = xcap
            else:
                lo_x, hi_x = 0.0, xcap
                for _ in range(60):
                    mid = 0.5 * (lo_x + hi_x)
                    if mid <= 0.0:
                        break
                    if self.scan(mid, 1.0)[0] <= log_limit:
                        lo_x = mid
                    else:
                        hi_x = mid
                self._thresholds[key] = lo_x
        return self._thresholds[key]


_TABLES: dict = {}


def _table(kind, params) -> _SeriesTable:
    key = (kind, params)
    tab = _TABLES.get(key)
    if tab is None:
        tab = _SeriesTable(kind, params)
        _TABLES[key] = tab   # racy but idempotent; reads stay lock-free
    return tab


# ---------------------------------------------------------------------------
# evaluation ladders
# ---------------------------------------------------------------------------

def _run_series(tab, z, x_abs_max, use_dd):
    decay = _DECAY_DD if use_dd else _DECAY_D
    peak, K = tab.scan(x_abs_max, decay)
    hi, lo = tab.coef_dd(K) if use_dd else tab.coef_double(K)
    vals, tails, terms, maxp = series_eval(
        hi, lo, z, use_dd=use_dd, asymptotic=False,
        tol=_SERIES_TOL_DD if use_dd else _SERIES_TOL_D)
    eps = _DD_EPS if use_dd else _D_EPS
    ests = tails + eps * maxp * (1.0 + np.sqrt(np.maximum(terms, 1)))
    return vals, ests, terms


def _series_ladder(tab, z, tol_eff, allow_integral_params=None):
    """double -> double-double -> (two-parameter only) integral fallback."""
    z = np.asarray(z, dtype=np.float64)
    x = np.abs(z)
    xcap = max(float(x.max()), 1e-6)
    vals = np.empty(z.size)
    ests = np.full(z.size, np.inf)
    terms = np.zeros(z.size, dtype=np.int64)

    def run(mask, use_dd):
        if not mask.any():
            return
        v, e, t = _run_series(tab, z[mask], float(x[mask].max()), use_dd)
        idx = np.nonzero(mask)[0]
        better = e < ests[idx]
        vals[idx[better]] = v[better]
        ests[idx[better]] = e[better]
        terms[idx[better]] = t[better]

    # plain doubles where the predicted cancellation noise is harmless
    x_d = tab.xmax_for(math.log(_TARGET / (30.0 * _D_EPS)), xcap)
    run((z >= 0.0) | (x <= x_d), use_dd=False)

    # double-double where needed and where partial sums cannot overflow
    x_ovf = tab.xmax_for(690.0, xcap)
    run((ests > tol_eff) & (x <= x_ovf), use_dd=True)

    if allow_integral_params is not None:
        alpha, beta = allow_integral_params
        if 0 < alpha < 1:
            for i in np.nonzero((ests > tol_eff) & (z < 0))[0]:
                v, e, t = _ml_integral(alpha, beta, float(z[i]))
                if e < ests[i]:
                    vals[i], ests[i], terms[i] = v, e, t
    return vals, ests, terms


def _ml_integral(alpha, beta, z):
    """Real-axis integral representation, 0 < alpha < 1, z < 0.

    After the substitution r = u**alpha the integrand decays like
    exp(-u) with an algebraic factor; validity needs beta < 1 + alpha,
    so larger beta is reached by stepping the three-term recurrence
    E_{a,b+a}(z) = (E_{a,b}(z) - 1/Gamma(b)) / z upward from a reduced b.
    """
    nsteps = 0
    b = beta
    while b >= 1.0 + alpha - 0.05:
        b -= alpha
        nsteps += 1

    s1 = math.sin(math.pi * (1.0 - b))
    s2 = math.sin(math.pi * (1.0 - b + alpha))
    c = math.cos(math.pi * alpha)
    z2 = z * z

    def integrand(u):
        ua = u ** alpha
        num = ua * s1 - z * s2
        den = ua * ua - 2.0 * ua * z * c + z2
        return (u ** (alpha - b)) * math.exp(-u) * num / (math.pi * den)

    v1, e1 = integrate.quad(integrand, 0.0, 1.0, epsabs=1e-15, epsrel=1e-13,
                            limit=300)
    v2, e2 = integrate.quad(integrand, 1.0, np.inf, epsabs=1e-15,
                            epsrel=1e-13, limit=300)
    val = v1 + v2
    est = e1 + e2 + 5e-16 * abs(val)
    for _ in range(nsteps):
        val = (val - float(sc.rgamma(b))) / z
        est = est / abs(z) + 2e-16 * (abs(val) + abs(float(sc.rgamma(b))))
        b += alpha
    return val, est, 0


def _asym_coeffs(alpha, beta, Kcap=400):
    """Coefficients b_j = (-1)^j / Gamma(beta - alpha (j+1)) in w = 1/|z|."""
    j = np.arange(Kcap, dtype=np.float64)
    arg = beta - alpha * (j + 1.0)
    with np.errstate(all="ignore"):
        mag_ok = sc.gammaln(np.maximum(alpha * (j + 1.0) + 1.0 - beta, 1.0)) < 600.0
    K = int(np.argmin(mag_ok)) if not mag_ok.all() else Kcap
    if K < 2:
        K = 2
    j = j[:K]
    coef = ((-1.0) ** j) * sc.rgamma(beta - alpha * (j + 1.0))
    return np.ascontiguousarray(coef), np.zeros(K)


def _ml_asymptotic(alpha, beta, x):
    """Expansion of E_{alpha,beta}(-x) for large x (x = |z| array)."""
    hi, lo = _asym_coeffs(alpha, beta)
    w = 1.0 / x
    s, tails, terms, _ = series_eval(hi, lo, w, use_dd=False, asymptotic=True,
                                     tol=1e-17)
    vals = w * s
    ests = w * tails + 1e-16 * np.abs(vals)

    if alpha == 1.0 and beta == 1.0:
        vals = vals + np.exp(-x)
    elif alpha >= 4.0 / 3.0:
        xa = x ** (1.0 / alpha)
        cosf = math.cos(math.pi / alpha)
        sinf = math.sin(math.pi / alpha)
        amp = (2.0 / alpha) * x ** ((1.0 - beta) / alpha) * np.exp(xa * cosf)
        vals = vals + amp * np.cos(math.pi * (1.0 - beta) / alpha + xa * sinf)
        ests = ests + _D_EPS * np.abs(amp)
    elif alpha > 0.75:
        # omitted exponentially small contribution, significant only
        # near the switch point for alpha close to 1
        xa = x ** (1.0 / alpha)
        cosf = math.cos(math.pi / alpha)
        ests = ests + (2.0 / alpha) * x ** (abs(1.0 - beta) / alpha) \
            * np.exp(xa * cosf)
    return vals, ests, terms


def ml_eval(alpha: float, beta: float, z, tol: float | None = None):
    """Vectorized two-parameter Mittag-Leffler on the real line.

    Returns ``(values, est_abs_errors, terms_used)`` as arrays shaped
    like ``z``.  ``tol`` tightens the internal accuracy goal but never
    raises; scalar wrappers decide whether to raise.
    """
    MLParams(alpha, beta)
    z = np.asarray(z, dtype=np.float64)
    shape = z.shape
    z = np.atleast_1d(z).ravel()
    if alpha >= 2.0:
        raise DomainError("alpha < 2 required on the evaluation paths")
    tol_eff = min(_TARGET, tol) if tol is not None else _TARGET
    tab = _table("ml", (float(alpha), float(beta)))

    vals = np.empty(z.size)
    ests = np.empty(z.size)
    terms = np.zeros(z.size, dtype=np.int64)

    x_switch = _X_SWITCH if alpha <= 1.0 else 38.0 ** alpha
    pos = z >= 0.0
    far = (~pos) & (-z > x_switch)
    mid = ~(pos | far)

    if pos.any():
        zmax = float(z[pos].max())
        if zmax > 0 and zmax ** (1.0 / alpha) > 700.0:
            raise AccuracyError(f"E_({alpha},{beta}) overflows at z={zmax}")
        v, e, t = _series_ladder(tab, z[pos], tol_eff)
        vals[pos], ests[pos], terms[pos] = v, e, t
    if mid.any():
        v, e, t = _series_ladder(tab, z[mid], tol_eff,
                                 allow_integral_params=(alpha, beta))
        vals[mid], ests[mid], terms[mid] = v, e, t
    if far.any():
        v, e, t = _ml_asymptotic(alpha, beta, -z[far])
        if 0 < alpha < 1:
            bad = e > tol_eff
            for i, j in zip(np.nonzero(far)[0][bad], np.nonzero(bad)[0]):
                vi, ei, ti = _ml_integral(alpha, beta, float(z[i]))
                if ei < e[j]:
                    v[j], e[j], t[j] = vi, ei, ti
        vals[far], ests[far], terms[far] = v, e, t

    return vals.reshape(shape), ests.reshape(shape), terms.reshape(shape)


def mittag_leffler(p: MLParams, z: float, tol: float | None = None) -> EvalResult:
    """E_{alpha,beta}(z) for real z with an absolute error bound.

    Raises :class:`AccuracyError` when ``tol`` is given and the error
    estimate cannot be driven below it.
    """
    v, e, t = ml_eval(p.alpha, p.beta, np.array([z]), tol=tol)
    res = EvalResult(float(v[0]), float(e[0]), int(t[0]))
    if tol is not None and res.est_abs_error > tol:
        raise AccuracyError(
            f"E_({p.alpha},{p.beta})({z}): achieved {res.est_abs_error:.3e} "
            f"> requested {tol:.3e}", res.est_abs_error)
    return res


def mittag_leffler_deriv(p: MLParams, k: int, z: float,
                         tol: float | None = None) -> EvalResult:
    """k-th derivative of E_{alpha,beta} via the term-differentiated series.

    Supported for small k; the precision ladder stops at double-double,
    so arguments deep in the cancellation regime raise AccuracyError.
    """
    if not (0 <= k <= 4):
        raise DomainError(f"derivative order must be in [0, 4], got {k}")
    if k == 0:
        return mittag_leffler(p, z, tol=tol)
    tol_eff = min(_TARGET, tol) if tol is not None else _TARGET
    tab = _table("mlderiv", (float(p.alpha), float(p.beta), int(k)))
    v, e, t = _series_ladder(tab, np.array([float(z)]), tol_eff)
    res = EvalResult(float(v[0]), float(e[0]), int(t[0]))
    if tol is not None and res.est_abs_error > tol:
        raise AccuracyError(
            f"E^({k})_({p.alpha},{p.beta})({z}): achieved "
            f"{res.est_abs_error:.3e} > requested {tol:.3e}",
            res.est_abs_error)
    return res


# ---------------------------------------------------------------------------
# generalized (three-parameter) function
# ---------------------------------------------------------------------------

def _genml_mp(alpha, m, n, z, log_cancel):
    """Exact multiprecision fallback; working digits follow the
    predicted cancellation."""
    if log_cancel > _MP_MAX_LOGCANCEL:
        raise AccuracyError(
            f"E_({alpha},{m},{n})({z}) needs ~{log_cancel / math.log(10):.0f} "
            "digits of cancellation headroom; beyond the supported budget")
    dps = int(log_cancel / math.log(10)) + 30
    with mp.workdps(dps):
        al = mp.mpf(alpha)
        mm = mp.mpf(m)
        nn = mp.mpf(n)
        zz = mp.mpf(z)
        s = mp.mpf(1)
        c = mp.mpf(1)
        zp = mp.mpf(1)
        floor = mp.mpf(10) ** (-dps + 8)
        dec = 0
        k = 0
        while True:
            aj = al * (mm * k + nn) + 1
            c *= mp.gamma(aj) / mp.gamma(aj + al)
            zp *= zz
            term = c * zp
            s += term
            k += 1
            if abs(term) < abs(s) * floor or abs(term) < floor:
                dec += 1
                if dec >= 3:
                    break
            else:
                dec = 0
            if k > 2_000_000:
                raise AccuracyError("generalized series failed to settle")
        val = float(s)
    # conversion to float64 dominates; the residual multiprecision noise
    # at the peak partial sum is ~10**(log_cancel/ln10 - dps + 8) = 1e-22
    noise = math.exp(min(log_cancel - (dps - 8) * math.log(10.0), 40.0))
    est = 2.3e-16 * abs(val) + noise
    return val, est, k


def gen_ml_eval(alpha: float, m: float, n: float, z,
                tol: float | None = None):
    """Vectorized generalized Mittag-Leffler; returns (values, ests, terms)."""
    GenMLParams(alpha, m, n)
    z = np.asarray(z, dtype=np.float64)
    shape = z.shape
    z = np.atleast_1d(z).ravel()
    tol_eff = min(_TARGET, tol) if tol is not None else _TARGET
    tab = _table("genml", (float(alpha), float(m), float(n)))

    vals = np.empty(z.size)
    ests = np.full(z.size, np.inf)
    terms = np.zeros(z.size, dtype=np.int64)

    xmax_all = float(np.abs(z).max())
    x_dd_cap = tab.xmax_for(690.0, max(xmax_all, 1e-6))
    inladder = np.abs(z) <= x_dd_cap
    if inladder.any():
        v, e, t = _series_ladder(tab, z[inladder], tol_eff)
        vals[inladder], ests[inladder], terms[inladder] = v, e, t

    for i in np.nonzero(~inladder | (ests > max(tol_eff, 1e-10)))[0]:
        peak, _ = tab.scan(abs(float(z[i])), 1.0)
        v, e, t = _genml_mp(alpha, m, n, float(z[i]), max(peak, 0.0))
        if e < ests[i]:
            vals[i], ests[i], terms[i] = v, e, t

    return vals.reshape(shape), ests.reshape(shape), terms.reshape(shape)


def gen_mittag_leffler(p: GenMLParams, z: float,
                       tol: float | None = None) -> EvalResult:
    """E_{alpha,m,n}(z) by direct summation of the defining series.

    The running product of gamma ratios is accumulated in log space
    (double path) or exact multiprecision (the two upper tiers), so no
    intermediate overflow occurs; cancellation beyond the supported
    budget raises :class:`AccuracyError` rather than returning noise.
    """
    v, e, t = gen_ml_eval(p.alpha, p.m, p.n, np.array([z]), tol=tol)
    res = EvalResult(float(v[0]), float(e[0]), int(t[0]))
    if tol is not None and res.est_abs_error > tol:
        raise AccuracyError(
            f"E_({p.alpha},{p.m},{p.n})({z}): achieved "
            f"{res.est_abs_error:.3e} > requested {tol:.3e}",
            res.est_abs_error)
    return res


# ---------------------------------------------------------------------------
# constant-forcing fractional Cauchy problem
# ---------------------------------------------------------------------------

def caputo_ode_solution(alpha: float, lam: float, b0: float, f_const: float,
                        t: float) -> float:
    """Solution of D^alpha y = lam*y + f_const, y(0) = b0 (Caputo, 0<alpha<=1).

    y(t) = b0 E_{alpha,1}(lam t^alpha) + f_const t^alpha
           E_{alpha,alpha+1}(lam t^alpha).
    """
    if not (0 < alpha <= 1):
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    if t < 0:
        raise DomainError(f"t must be nonnegative, got {t}")
    if t == 0.0:
        return float(b0)
    ta = t ** alpha
    arg = lam * ta
    y = b0 * mittag_leffler(MLParams(alpha, 1.0), arg).value
    if f_const != 0.0:
        y += f_const * ta * mittag_leffler(MLParams(alpha, alpha + 1.0), arg).value
    return float(y)
