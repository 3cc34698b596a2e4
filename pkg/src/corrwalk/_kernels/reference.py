"""Pure-numpy implementations of the numerical kernels.

Selected with CORRWALK_BACKEND=numpy, or automatically when numba is not
installed.  The Monte Carlo kernels reproduce the jit backend bit for bit;
the analytic kernels agree with it to floating-point roundoff.
"""

from __future__ import annotations

import numpy as np

_MASK = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_INV53 = 1.0 / 9007199254740992.0  # 2**-53


def _mix64(z: np.ndarray) -> np.ndarray:
    """Scramble an array of 64-bit counters into uniform 64-bit words."""
    z = z.copy()
    z ^= z >> np.uint64(30)
    z *= np.uint64(_MIX1)
    z ^= z >> np.uint64(27)
    z *= np.uint64(_MIX2)
    z ^= z >> np.uint64(31)
    return z


def _stream_keys(seed: np.uint64, n_samples: int) -> np.ndarray:
    """Per-sample stream keys: mix64(seed + (t + 1) * GOLDEN)."""
    idx = np.arange(1, n_samples + 1, dtype=np.uint64)
    return _mix64(np.uint64(seed) + idx * np.uint64(_GOLDEN))


def _uniforms(stream_keys: np.ndarray, counter: int) -> np.ndarray:
    """Uniform(0, 1) draw number `counter` from each stream."""
    # Scalar uint64 products warn on overflow under numpy 2, so the offset
    # is reduced in Python integers first.
    offset = np.uint64((counter * _GOLDEN) & _MASK)
    z = _mix64(stream_keys + offset)
    return (z >> np.uint64(11)).astype(np.float64) * _INV53


def _logsumexp(values: np.ndarray) -> float:
    top = values.max()
    return float(top + np.log(np.exp(values - top).sum()))


def log_f_table(n: int, z: float) -> tuple[np.ndarray, np.ndarray]:
    """Log of the two terminating series used by the exact position law.

    For each k in 1..n//2, with K = k - 1 and M = n - k - 1, computes

        F1(k) = sum_g C(K, g) C(M, g) z^g
        F2(k) = sum_g C(K, g) C(M, g) z^g / (g + 1)

    and returns (log F1, log F2) as arrays of length n//2 + 1 (index 0 is
    unused and left at 0).  All terms are positive, so log-space summation
    is exact to roundoff even when the plain values overflow.
    """
    half = n // 2
    log_f1 = np.zeros(half + 1)
    log_f2 = np.zeros(half + 1)
    lz = np.log(z)
    for k in range(1, half + 1):
        big_k = k - 1
        big_m = n - k - 1
        g = big_k  # min(K, M) because k <= n - k
        if g == 0:
            continue
        gam = np.arange(1, g + 1, dtype=np.float64)
        inc = lz + np.log(big_k - gam + 1) + np.log(big_m - gam + 1) - 2.0 * np.log(gam)
        logterms = np.concatenate(([0.0], np.cumsum(inc)))
        log_f1[k] = _logsumexp(logterms)
        log_f2[k] = _logsumexp(logterms - np.log(np.arange(1, g + 2, dtype=np.float64)))
    return log_f1, log_f2


def evolve_pmf(n: int, a: float, d: float, alpha: float) -> np.ndarray:
    """Exact position law after n steps by direct evolution of (L, R) mass.

    Returns pmf over positions 2*i - n for i = 0..n.  This is the
    recursion-based route, independent of the closed-form path sums, and
    the only exact route available when a + d = 1.
    """
    b = 1.0 - d
    c = 1.0 - a
    width = 2 * n + 1
    lstate = np.zeros(width)
    rstate = np.zeros(width)
    lstate[n] = alpha
    rstate[n] = 1.0 - alpha
    for _ in range(n):
        new_l = np.zeros(width)
        new_r = np.zeros(width)
        new_l[:-1] = a * lstate[1:] + b * rstate[1:]
        new_r[1:] = c * lstate[:-1] + d * rstate[:-1]
        lstate, rstate = new_l, new_r
    return lstate[0::2] + rstate[0::2]


def path_product_sums(n: int, a: float, d: float) -> np.ndarray:
    """Sum of all 2^n n-step operator products, grouped by right-step count.

    Enumerates every word over the left-step and right-step matrices
    (later steps multiply on the left) and accumulates the raw 2x2
    products into out[m] for words containing m right steps.  Exponential
    in n; callers enforce the enumeration budget.
    """
    b = 1.0 - d
    c = 1.0 - a
    left_mat = np.array([[a, b], [0.0, 0.0]])
    right_mat = np.array([[0.0, 0.0], [c, d]])
    total = 1 << n
    prods = np.empty((total, 2, 2))
    prods[0] = np.eye(2)
    size = 1
    for _ in range(n):
        lower = prods[:size]
        prods[size : 2 * size] = np.matmul(right_mat, lower)
        prods[:size] = np.matmul(left_mat, lower)
        size *= 2
    counts = np.bitwise_count(np.arange(total, dtype=np.uint64)).astype(np.int64)
    out = np.zeros((n + 1, 2, 2))
    for m in range(n + 1):
        out[m] = prods[counts == m].sum(axis=0)
    return out


def walk_final_positions(
    a: float, d: float, alpha: float, n_steps: int, n_samples: int, seed: np.uint64
) -> np.ndarray:
    """Final positions of n_samples independent n_steps-step walks."""
    b = 1.0 - d
    keys = _stream_keys(seed, n_samples)
    u = _uniforms(keys, 1)
    is_left = u < alpha
    pos = np.zeros(n_samples, dtype=np.int64)
    for step in range(1, n_steps + 1):
        u = _uniforms(keys, step + 1)
        step_left = u < np.where(is_left, a, b)
        pos += np.where(step_left, -1, 1)
        is_left = step_left
    return pos


def absorb_final_positions(
    a: float,
    d: float,
    alpha: float,
    n_sites: int,
    start: int,
    max_steps: int,
    n_samples: int,
    seed: np.uint64,
) -> np.ndarray:
    """Final positions of walks run until absorption or the step cap.

    Site 0 always absorbs; site n_sites absorbs too unless n_sites <= 0
    (the half-line case).  Walks still in the interior after max_steps are
    returned at their current (interior) position.
    """
    b = 1.0 - d
    keys = _stream_keys(seed, n_samples)
    u = _uniforms(keys, 1)
    is_left = u < alpha
    pos = np.full(n_samples, start, dtype=np.int64)
    final = np.full(n_samples, start, dtype=np.int64)
    active = np.arange(n_samples)
    for step in range(1, max_steps + 1):
        if active.size == 0:
            break
        u = _uniforms(keys, step + 1)
        step_left = u < np.where(is_left, a, b)
        pos = pos + np.where(step_left, -1, 1)
        is_left = step_left
        hit = pos == 0
        if n_sites > 0:
            hit |= pos == n_sites
        if hit.any():
            final[active[hit]] = pos[hit]
            keep = ~hit
            active = active[keep]
            pos = pos[keep]
            is_left = is_left[keep]
            keys = keys[keep]
    final[active] = pos
    return final
