"""Characteristic function, integer moments, and symmetry of the walk.

All three consume the exact position law and pair each site with its
mirror image.  Pairing matters: for a symmetric walk the paired masses are
equal bit for bit, so odd moments come out exactly zero and the
characteristic function exactly real, with no cancellation residue.
"""

from __future__ import annotations

import numpy as np

from .exact import Distribution, distribution
from .params import InitialDistribution, WalkParameters


def _mirror_split(dist: Distribution) -> tuple[np.ndarray, np.ndarray, np.ndarray, float]:
    """Positive positions with paired mass sums/differences, plus center mass.

    Returns (positions > 0, prob(+pos) + prob(-pos), prob(+pos) - prob(-pos),
    prob(0)); the center mass is 0.0 for odd step counts.
    """
    n = dist.n
    probs = dist.probabilities
    lo = np.arange((n + 1) // 2)
    hi = n - lo
    pos = dist.positions[hi].astype(np.float64)
    paired_sum = probs[hi] + probs[lo]
    paired_diff = probs[hi] - probs[lo]
    center = float(probs[n // 2]) if n % 2 == 0 else 0.0
    return pos, paired_sum, paired_diff, center


def characteristic_function(
    n: int, angle: float, params: WalkParameters, phi: InitialDistribution
) -> complex:
    """E(exp(i * angle * X_n)), exactly, from the closed-form position law.

    Assembled as sum_pos [(p(+pos) + p(-pos)) cos(pos*angle)
    + i (p(+pos) - p(-pos)) sin(pos*angle)] plus the center mass for even n.
    """
    pos, paired_sum, paired_diff, center = _mirror_split(distribution(n, params, phi))
    real = float(paired_sum @ np.cos(pos * angle)) + center
    imag = float(paired_diff @ np.sin(pos * angle))
    return complex(real, imag)


def moment(
    n: int, order: int, params: WalkParameters, phi: InitialDistribution
) -> float:
    """E((X_n)^order) for a positive integer order, exactly.

    Even orders sum (p(+pos) + p(-pos)) pos^order over positive sites; odd
    orders use the paired differences, so symmetric walks return exactly 0.
    """
    if order != int(order) or order < 1:
        raise ValueError(f"moment order must be a positive integer, got {order}")
    order = int(order)
    pos, paired_sum, paired_diff, _ = _mirror_split(distribution(n, params, phi))
    weights = paired_sum if order % 2 == 0 else paired_diff
    return float(weights @ pos**order)


def is_symmetric_closed_form(params: WalkParameters, phi: InitialDistribution) -> bool:
    """Symmetry predicate in closed form.

    The law of X_n is symmetric for every n exactly when a = d and either
    a = 1/2 (direction-independent steps) or the chirality weights are
    equal.  For a != d the extreme positions already break symmetry.
    """
    if params.a != params.d:
        return False
    return params.a == 0.5 or phi.alpha == phi.beta


def is_symmetric(
    params: WalkParameters,
    phi: InitialDistribution,
    horizon: int = 20,
    tolerance: float = 1e-10,
) -> bool:
    """Empirical symmetry check: pmf(k) = pmf(-k) for every n <= horizon."""
    if horizon != int(horizon) or horizon < 1:
        raise ValueError(f"horizon must be a positive integer, got {horizon}")
    for n in range(1, int(horizon) + 1):
        probs = distribution(n, params, phi).probabilities
        if np.max(np.abs(probs - probs[::-1])) > tolerance:
            return False
    return True
