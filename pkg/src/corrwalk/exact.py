"""Closed-form path sums and the exact finite-time position law.

Paths of a correlated walk group into classes sharing a left-step count and
a right-step count.  The summed operator product over each class has a
closed form: a terminating hypergeometric-style sum over the four-matrix
basis.  Assembling all classes yields the exact pmf of the position after n
steps in O(n^2) time.  The pmf assembly runs in log space, so it stays
finite for n in the thousands where the raw prefactors underflow and the
series values overflow.

A brute-force route (direct enumeration of all 2^n step words) backs every
closed form here; it is exponential and capped at ENUMERATION_MAX_STEPS.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as kernels
from .errors import BudgetExceededError
from .params import InitialDistribution, WalkParameters
from .pqrs import PqrsMatrix, compose, decompose

#: Largest n for which brute-force enumeration of 2^n paths is allowed.
ENUMERATION_MAX_STEPS = 22


def hyp2f1_terminating(first: float, second: float, third: float, z: float) -> float:
    """Gauss hypergeometric 2F1(first, second; third; z), terminating case.

    ``first`` and ``second`` must be nonpositive integers, which makes the
    defining series a finite sum; ``third`` must not be a nonpositive
    integer.  Evaluated by the forward term recurrence.
    """
    for value in (first, second):
        if value != int(value) or value > 0:
            raise ValueError(
                f"first two parameters must be nonpositive integers, got {value}"
            )
    if third != int(third) or third < 1:
        raise ValueError(f"third parameter must be a positive integer, got {third}")
    count = min(-int(first), -int(second))
    total = 1.0
    term = 1.0
    for g in range(count):
        term *= (first + g) * (second + g) / ((third + g) * (g + 1.0)) * z
        total += term
    return total


def path_sum(n_left: int, n_right: int, params: WalkParameters) -> PqrsMatrix:
    """Closed-form sum of operator products over all paths with the given
    left- and right-step counts, as coefficients over the four-matrix basis.

    Needs no division by the basis determinant, so it is stable for any
    parameters, including a + d = 1.
    """
    _check_step_counts(n_left, n_right)
    a, b, c, d = params.a, params.b, params.c, params.d
    if n_right == 0:
        return PqrsMatrix(a ** (n_left - 1), 0.0, 0.0, 0.0, params)
    if n_left == 0:
        return PqrsMatrix(0.0, d ** (n_right - 1), 0.0, 0.0, params)
    z = params.persistence_ratio
    cp = cq = cr = cs = 0.0
    weight = z  # z^g * C(n_left-1, g-1) * C(n_right-1, g-1) at g = 1
    for g in range(1, min(n_left, n_right) + 1):
        cp += weight * (n_left - g) / (a * g)
        cq += weight * (n_right - g) / (d * g)
        cr += weight / c
        cs += weight / b
        weight *= z * (n_left - g) * (n_right - g) / (g * g)
    base = a**n_left * d**n_right
    return PqrsMatrix(base * cp, base * cq, base * cr, base * cs, params)


def path_matrix(n_left: int, n_right: int, params: WalkParameters) -> np.ndarray:
    """The closed-form path sum reassembled as a plain 2x2 matrix."""
    return compose(path_sum(n_left, n_right, params))


def path_matrix_bruteforce(n_left: int, n_right: int, params: WalkParameters) -> np.ndarray:
    """Sum of operator products over a path class by direct enumeration.

    Enumerates all 2^(n_left + n_right) step words and keeps the matching
    class; raises BudgetExceededError past ENUMERATION_MAX_STEPS total
    steps.
    """
    _check_step_counts(n_left, n_right)
    n = n_left + n_right
    if n > ENUMERATION_MAX_STEPS:
        raise BudgetExceededError(
            f"enumeration of 2^{n} paths exceeds the {ENUMERATION_MAX_STEPS}-step budget"
        )
    sums = kernels.path_product_sums(n, params.a, params.d)
    return sums[n_right]


def path_sum_bruteforce(n_left: int, n_right: int, params: WalkParameters) -> PqrsMatrix:
    """Enumerated path-class sum, decomposed onto the four-matrix basis.

    Requires a non-singular basis; see path_matrix_bruteforce for the
    raw-matrix variant that works for any parameters.
    """
    return decompose(path_matrix_bruteforce(n_left, n_right, params), params)


def _check_step_counts(n_left: int, n_right: int) -> None:
    if n_left != int(n_left) or n_right != int(n_right) or n_left < 0 or n_right < 0:
        raise ValueError(
            f"step counts must be nonnegative integers, got ({n_left}, {n_right})"
        )
    if n_left + n_right == 0:
        raise ValueError("a path class needs at least one step")


@dataclass(frozen=True, eq=False)
class Distribution:
    """Exact law of the walk's position after n steps.

    positions[i] = 2*i - n for i = 0..n (the reachable lattice sites,
    including zero-probability parity-consistent sites), and
    probabilities[i] is the exact probability of ending there.
    """

    n: int
    positions: np.ndarray
    probabilities: np.ndarray

    def __post_init__(self) -> None:
        positions = np.asarray(self.positions, dtype=np.int64)
        probabilities = np.asarray(self.probabilities, dtype=np.float64)
        if positions.shape != (self.n + 1,) or probabilities.shape != (self.n + 1,):
            raise ValueError("positions and probabilities must have length n + 1")
        total = probabilities.sum()
        if not np.isfinite(total) or abs(total - 1.0) > 1e-10:
            raise ValueError(f"probabilities must sum to 1, got {total!r}")
        object.__setattr__(self, "positions", positions)
        object.__setattr__(self, "probabilities", probabilities)

    def prob(self, position: int) -> float:
        """Probability of ending exactly at `position` (0.0 off support)."""
        shifted = position + self.n
        if shifted < 0 or shifted > 2 * self.n or shifted % 2 != 0:
            return 0.0
        return float(self.probabilities[shifted // 2])

    def cdf(self, value: float) -> float:
        """P(position <= value)."""
        upto = int(np.searchsorted(self.positions, value, side="right"))
        return float(self.probabilities[:upto].sum())


def distribution(
    n: int, params: WalkParameters, phi: InitialDistribution
) -> Distribution:
    """Exact n-step position law.

    Uses the closed-form path sums evaluated in log space.  When the basis
    is singular (a + d = 1) the closed form's correction term vanishes and
    the law is computed by direct evolution instead, which is exact there.
    """
    if n != int(n) or n < 1:
        raise ValueError(f"step count must be a positive integer, got {n}")
    n = int(n)
    positions = 2 * np.arange(n + 1, dtype=np.int64) - n
    if params.is_singular_basis:
        probs = kernels.evolve_pmf(n, params.a, params.d, phi.alpha)
    else:
        probs = _closed_form_pmf(n, params, phi)
    return Distribution(n, positions, probs)


def _closed_form_pmf(
    n: int, params: WalkParameters, phi: InitialDistribution
) -> np.ndarray:
    a, b, c, d = params.a, params.b, params.c, params.d
    alpha, beta = phi.alpha, phi.beta
    probs = np.zeros(n + 1)
    probs[0] = a ** (n - 1) * (a * alpha + b * beta)
    probs[n] = d ** (n - 1) * (c * alpha + d * beta)
    if n < 2:
        return probs
    log_f1, log_f2 = kernels.log_f_table(n, params.persistence_ratio)
    half = n // 2
    ks = np.arange(1, half + 1, dtype=np.float64)
    log_a, log_d = np.log(a), np.log(d)
    log_pre_plus = (ks - 2.0) * log_a + (n - ks - 2.0) * log_d
    log_pre_minus = (n - ks - 2.0) * log_a + (ks - 2.0) * log_d
    # Series weights: both are strictly positive for a valid chirality
    # distribution, while the correction term carries the sign of delta.
    bracket_plus = b * c * (
        (d * ks + c * (n - ks)) * a * alpha + (b * ks + a * (n - ks)) * d * beta
    )
    bracket_minus = b * c * (
        (c * ks + d * (n - ks)) * a * alpha + (a * ks + b * (n - ks)) * d * beta
    )
    correction = (a * c * alpha + b * d * beta) * params.delta
    log_corr = np.log(abs(correction)) + log_f1[1:]
    sign = 1.0 if correction > 0 else -1.0
    p_minus = np.exp(
        log_pre_minus + _signed_log_add(np.log(bracket_minus) + log_f2[1:], log_corr, sign)
    )
    p_plus = np.exp(
        log_pre_plus + _signed_log_add(np.log(bracket_plus) + log_f2[1:], log_corr, sign)
    )
    idx = np.arange(1, half + 1)
    probs[idx] = p_minus
    probs[n - idx] = p_plus  # at even n the midpoint entries coincide exactly
    return probs


def _signed_log_add(log_x: np.ndarray, log_y: np.ndarray, sign_y: float) -> np.ndarray:
    """log(exp(log_x) + sign_y * exp(log_y)), elementwise.

    The true sums here are probabilities, hence positive; if roundoff ever
    drives a sum nonpositive it is clamped to -inf (probability zero).
    """
    top = np.maximum(log_x, log_y)
    value = np.exp(log_x - top) + sign_y * np.exp(log_y - top)
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(value > 0.0, top + np.log(value), -np.inf)


def distribution_bruteforce(
    n: int, params: WalkParameters, phi: InitialDistribution
) -> Distribution:
    """Exact n-step law by enumerating all 2^n step words.

    Exponential-time oracle for validating the closed form; raises
    BudgetExceededError for n above ENUMERATION_MAX_STEPS.
    """
    if n != int(n) or n < 1:
        raise ValueError(f"step count must be a positive integer, got {n}")
    n = int(n)
    if n > ENUMERATION_MAX_STEPS:
        raise BudgetExceededError(
            f"enumeration of 2^{n} paths exceeds the {ENUMERATION_MAX_STEPS}-step budget"
        )
    sums = kernels.path_product_sums(n, params.a, params.d)
    probs = (sums @ phi.vector).sum(axis=1)
    positions = 2 * np.arange(n + 1, dtype=np.int64) - n
    return Distribution(n, positions, probs)
