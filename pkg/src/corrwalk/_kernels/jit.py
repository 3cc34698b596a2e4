"""Numba-compiled implementations of the numerical kernels.

Same contracts as the reference module.  All 64-bit RNG state is kept in
explicit uint64 so the bit patterns match the reference backend exactly.
"""

from __future__ import annotations

import numpy as np
from numba import njit

_UGOLDEN = np.uint64(0x9E3779B97F4A7C15)
_UMIX1 = np.uint64(0xBF58476D1CE4E5B9)
_UMIX2 = np.uint64(0x94D049BB133111EB)
_U11 = np.uint64(11)
_U27 = np.uint64(27)
_U30 = np.uint64(30)
_U31 = np.uint64(31)
_INV53 = 1.0 / 9007199254740992.0  # 2**-53


@njit(cache=True)
def _mix64(z):
    z ^= z >> _U30
    z *= _UMIX1
    z ^= z >> _U27
    z *= _UMIX2
    z ^= z >> _U31
    return z


@njit(cache=True)
def _uniform(stream_key, counter):
    z = _mix64(stream_key + np.uint64(counter) * _UGOLDEN)
    return (z >> _U11) * _INV53


@njit(cache=True)
def log_f_table(n, z):
    half = n // 2
    log_f1 = np.zeros(half + 1)
    log_f2 = np.zeros(half + 1)
    lz = np.log(z)
    scratch = np.empty(half + 1)
    for k in range(1, half + 1):
        big_k = k - 1
        big_m = n - k - 1
        g = big_k  # min(K, M) because k <= n - k
        if g == 0:
            continue
        scratch[0] = 0.0
        acc = 0.0
        for gam in range(1, g + 1):
            acc += lz + np.log(big_k - gam + 1.0) + np.log(big_m - gam + 1.0) - 2.0 * np.log(gam)
            scratch[gam] = acc
        top = scratch[0]
        for gam in range(1, g + 1):
            if scratch[gam] > top:
                top = scratch[gam]
        s1 = 0.0
        s2 = 0.0
        for gam in range(g + 1):
            term = np.exp(scratch[gam] - top)
            s1 += term
            s2 += term / (gam + 1.0)
        log_f1[k] = top + np.log(s1)
        log_f2[k] = top + np.log(s2)
    return log_f1, log_f2


@njit(cache=True)
def evolve_pmf(n, a, d, alpha):
    b = 1.0 - d
    c = 1.0 - a
    width = 2 * n + 1
    lstate = np.zeros(width)
    rstate = np.zeros(width)
    lstate[n] = alpha
    rstate[n] = 1.0 - alpha
    new_l = np.zeros(width)
    new_r = np.zeros(width)
    for _ in range(n):
        for i in range(width - 1):
            new_l[i] = a * lstate[i + 1] + b * rstate[i + 1]
        new_l[width - 1] = 0.0
        new_r[0] = 0.0
        for i in range(1, width):
            new_r[i] = c * lstate[i - 1] + d * rstate[i - 1]
        lstate, rstate, new_l, new_r = new_l, new_r, lstate, rstate
    pmf = np.empty(n + 1)
    for i in range(n + 1):
        pmf[i] = lstate[2 * i] + rstate[2 * i]
    return pmf


@njit(cache=True)
def path_product_sums(n, a, d):
    b = 1.0 - d
    c = 1.0 - a
    out = np.zeros((n + 1, 2, 2))
    total = 1 << n
    for w in range(total):
        m00 = 1.0
        m01 = 0.0
        m10 = 0.0
        m11 = 1.0
        rights = 0
        for t in range(n):
            if (w >> t) & 1 == 0:
                n00 = a * m00 + b * m10
                n01 = a * m01 + b * m11
                n10 = 0.0
                n11 = 0.0
            else:
                n00 = 0.0
                n01 = 0.0
                n10 = c * m00 + d * m10
                n11 = c * m01 + d * m11
                rights += 1
            m00, m01, m10, m11 = n00, n01, n10, n11
        out[rights, 0, 0] += m00
        out[rights, 0, 1] += m01
        out[rights, 1, 0] += m10
        out[rights, 1, 1] += m11
    return out


@njit(cache=True)
def walk_final_positions(a, d, alpha, n_steps, n_samples, seed):
    b = 1.0 - d
    out = np.empty(n_samples, dtype=np.int64)
    for t in range(n_samples):
        key = _mix64(seed + np.uint64(t + 1) * _UGOLDEN)
        is_left = _uniform(key, 1) < alpha
        pos = 0
        for step in range(1, n_steps + 1):
            thresh = a if is_left else b
            step_left = _uniform(key, step + 1) < thresh
            pos += -1 if step_left else 1
            is_left = step_left
        out[t] = pos
    return out


@njit(cache=True)
def absorb_final_positions(a, d, alpha, n_sites, start, max_steps, n_samples, seed):
    b = 1.0 - d
    out = np.empty(n_samples, dtype=np.int64)
    for t in range(n_samples):
        key = _mix64(seed + np.uint64(t + 1) * _UGOLDEN)
        is_left = _uniform(key, 1) < alpha
        pos = start
        for step in range(1, max_steps + 1):
            thresh = a if is_left else b
            step_left = _uniform(key, step + 1) < thresh
            pos += -1 if step_left else 1
            is_left = step_left
            if pos == 0 or (n_sites > 0 and pos == n_sites):
                break
        out[t] = pos
    return out
