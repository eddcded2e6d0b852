"""Numba lane for the Mittag-Leffler evaluation kernels.

Same three primitives as rsfbm._ml_numpy, compiled scalar loops. Selected by
default when numba imports; override with RSFBM_BACKEND=numpy.
"""

import math

import numpy as np
from numba import njit

_LN_TINY = -745.0
_U_LO, _U_HI = -6.7, 2.6


@njit(cache=True)
def _series_scalar(alpha, beta, z, rel_tol, max_terms):
    total = math.exp(-math.lgamma(beta))
    if z == 0.0:
        return total, True
    logabs = math.log(abs(z))
    sgn = -1.0 if z < 0.0 else 1.0
    sgn_pow = 1.0
    small_run = 0
    for n in range(1, max_terms):
        lt = n * logabs - math.lgamma(alpha * n + beta)
        sgn_pow *= sgn
        term = math.exp(min(lt, 700.0)) * sgn_pow if lt > _LN_TINY else 0.0
        total += term
        if abs(term) <= rel_tol * abs(total) + 1e-300:
            small_run += 1
            if small_run >= 3:
                return total, True
        else:
            small_run = 0
    return total, False


@njit(cache=True)
def ml_series(alpha, beta, z, rel_tol, max_terms):
    out = np.empty(z.size)
    ok = np.empty(z.size, dtype=np.bool_)
    for i in range(z.size):
        out[i], ok[i] = _series_scalar(alpha, beta, z[i], rel_tol, max_terms)
    return out, ok


@njit(cache=True)
def _log_series_scalar(alpha, beta, z, rel_tol, max_terms):
    peak = -math.lgamma(beta)
    scaled = 1.0
    prev_lt = peak
    logz = math.log(z)
    small_run = 0
    for n in range(1, max_terms):
        lt = n * logz - math.lgamma(alpha * n + beta)
        if lt > peak:
            scaled = scaled * math.exp(peak - lt) + 1.0
            peak = lt
        else:
            scaled += math.exp(max(lt - peak, _LN_TINY))
        contrib = math.exp(max(lt - peak, _LN_TINY)) / scaled
        if lt < prev_lt and contrib < rel_tol:
            small_run += 1
            if small_run >= 3:
                return peak + math.log(scaled), True
        else:
            small_run = 0
        prev_lt = lt
    return peak + math.log(scaled), False


@njit(cache=True)
def ml_log_series(alpha, beta, z, rel_tol, max_terms):
    out = np.empty(z.size)
    ok = np.empty(z.size, dtype=np.bool_)
    for i in range(z.size):
        out[i], ok[i] = _log_series_scalar(alpha, beta, z[i], rel_tol, max_terms)
    return out, ok


@njit(cache=True)
def _spectral_eval(alpha, beta, x, s1, s2, c, pw_exp, h):
    total = 0.0
    n = int((_U_HI - _U_LO) / h) + 1
    for k in range(n):
        u = _U_LO + k * h
        logr = 2.0 * math.sinh(u)
        r = math.exp(logr)
        ra = math.exp(max(alpha * logr, _LN_TINY))
        pw = math.exp(max(pw_exp * logr, _LN_TINY))
        num = ra * s1 + x * s2
        den = ra * ra + 2.0 * c * x * ra + x * x
        total += math.exp(-r) * pw * num / den * 2.0 * math.cosh(u)
    return total * h / math.pi


@njit(cache=True)
def _spectral_scalar(alpha, beta, x, abs_tol, rel_tol, max_level):
    s1 = math.sin(math.pi * (1.0 - beta))
    s2 = math.sin(math.pi * (1.0 + alpha - beta))
    c = math.cos(math.pi * alpha)
    pw_exp = alpha - beta + 1.0
    h = 0.4
    prev = _spectral_eval(alpha, beta, x, s1, s2, c, pw_exp, h)
    for _ in range(max_level - 1):
        h *= 0.5
        cur = _spectral_eval(alpha, beta, x, s1, s2, c, pw_exp, h)
        if abs(cur - prev) <= max(abs_tol, rel_tol * abs(cur)):
            return cur, True
        prev = cur
    return prev, False


@njit(cache=True)
def ml_neg_spectral(alpha, beta, x, abs_tol, rel_tol, max_level=8):
    out = np.empty(x.size)
    ok = np.empty(x.size, dtype=np.bool_)
    for i in range(x.size):
        out[i], ok[i] = _spectral_scalar(alpha, beta, x[i], abs_tol, rel_tol, max_level)
    return out, ok
