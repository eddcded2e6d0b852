"""Pure-numpy lane for the Mittag-Leffler evaluation kernels.

Three primitives shared with the numba lane (same algorithms, vectorized):

* ``ml_series``       -- float power series, small arguments of either sign,
* ``ml_log_series``   -- all-positive-term series in log space, z > 0,
* ``ml_neg_spectral`` -- collapsed Hankel-contour integral for large negative
                         arguments, valid for 0 < alpha < 1, 0 < beta < 1+alpha.

All functions take and return 1-D float64 arrays plus a convergence mask.
"""

import math

import numpy as np

_LN_TINY = -745.0
# window for the double-exponential substitution r = exp(2 sinh u)
_U_LO, _U_HI = -6.7, 2.6


def ml_series(alpha, beta, z, rel_tol, max_terms):
    """Power series sum_n z^n / Gamma(alpha n + beta), elementwise."""
    z = np.asarray(z, dtype=np.float64)
    n_el = z.size
    total = np.full(n_el, math.exp(-math.lgamma(beta)))
    logabs = np.where(z == 0.0, -np.inf, np.log(np.abs(np.where(z == 0.0, 1.0, z))))
    sgn = np.where(z < 0.0, -1.0, 1.0)
    sgn_pow = np.ones(n_el)
    small_run = np.zeros(n_el, dtype=np.int64)
    done = np.zeros(n_el, dtype=bool)
    for n in range(1, max_terms):
        lg = math.lgamma(alpha * n + beta)
        lt = n * logabs - lg
        sgn_pow = sgn_pow * sgn
        term = np.where(lt > _LN_TINY, np.exp(np.minimum(lt, 700.0)), 0.0) * sgn_pow
        total = np.where(done, total, total + term)
        small = np.abs(term) <= rel_tol * np.abs(total) + 1e-300
        small_run = np.where(small, small_run + 1, 0)
        done = done | (small_run >= 3)
        if done.all():
            break
    return total, done


def ml_log_series(alpha, beta, z, rel_tol, max_terms):
    """log E_{alpha,beta}(z) for z > 0 via online log-sum-exp of the series."""
    z = np.asarray(z, dtype=np.float64)
    n_el = z.size
    logz = np.log(z)
    peak = np.full(n_el, -math.lgamma(beta))  # running max log-term
    scaled = np.ones(n_el)                    # sum of exp(log-term - peak)
    prev_lt = peak.copy()
    small_run = np.zeros(n_el, dtype=np.int64)
    done = np.zeros(n_el, dtype=bool)
    for n in range(1, max_terms):
        lt = n * logz - math.lgamma(alpha * n + beta)
        bigger = (lt > peak) & ~done
        keep = ~bigger & ~done
        scaled = np.where(bigger, scaled * np.exp(peak - lt) + 1.0, scaled)
        scaled = np.where(keep, scaled + np.exp(np.maximum(lt - peak, _LN_TINY)), scaled)
        peak = np.where(bigger, lt, peak)
        contrib = np.exp(np.maximum(lt - peak, _LN_TINY)) / scaled
        small = (lt < prev_lt) & (contrib < rel_tol)
        small_run = np.where(small, small_run + 1, 0)
        done = done | (small_run >= 3)
        prev_lt = lt
        if done.all():
            break
    return peak + np.log(scaled), done


def ml_neg_spectral(alpha, beta, x, abs_tol, rel_tol, max_level=8):
    """E_{alpha,beta}(-x) for x > 0 via the real spectral integral.

    E_{a,b}(-x) = (1/pi) * int_0^inf exp(-r) r^(a-b)
                  * [r^a sin(pi(1-b)) + x sin(pi(1+a-b))]
                  / (r^(2a) + 2 x r^a cos(pi a) + x^2) dr,
    computed on r = exp(2 sinh u) with trapezoid steps halved to convergence.
    """
    x = np.asarray(x, dtype=np.float64)
    s1 = math.sin(math.pi * (1.0 - beta))
    s2 = math.sin(math.pi * (1.0 + alpha - beta))
    c = math.cos(math.pi * alpha)
    pw_exp = alpha - beta + 1.0

    prev = None
    conv = np.zeros(x.size, dtype=bool)
    h = 0.4
    for _ in range(max_level):
        u = np.arange(_U_LO, _U_HI + 0.5 * h, h)
        logr = 2.0 * np.sinh(u)
        r = np.exp(logr)
        ra = np.exp(np.maximum(alpha * logr, _LN_TINY))
        pw = np.exp(np.maximum(pw_exp * logr, _LN_TINY))
        jac = 2.0 * np.cosh(u)
        num = ra[None, :] * s1 + x[:, None] * s2
        den = ra[None, :] ** 2 + 2.0 * c * x[:, None] * ra[None, :] + (x**2)[:, None]
        g = np.exp(-r)[None, :] * pw[None, :] * num / den * jac[None, :] / math.pi
        cur = g.sum(axis=1) * h
        if prev is not None:
            conv = conv | (np.abs(cur - prev) <= np.maximum(abs_tol, rel_tol * np.abs(cur)))
        prev = cur
        if conv.all():
            break
        h *= 0.5
    # the finest grid estimate is the best available for every element
    return prev, conv
