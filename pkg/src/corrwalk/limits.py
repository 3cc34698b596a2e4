"""Long-time limit laws of the correlated walk and their special functions.

Two scaling regimes are covered.  With fixed parameters and a = d, the
rescaled position X_n / sqrt(n) is asymptotically normal with variance
a / (1 - a).  With the persistence strengthened as a_n = 1 - theta/n, the
rescaled position X_n / n converges to a mixed law: atoms at -1 and +1 of
total mass e^(-theta), split by the initial chirality weights, plus an
absolutely continuous Bessel-type density on (-1, 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.integrate import quad

from .errors import ApplicabilityError
from .exact import distribution, hyp2f1_terminating
from .params import InitialDistribution, WalkParameters

#: Series budget for the modified Bessel evaluation.
BESSEL_MAX_ARGUMENT = 50.0


def bessel_i(nu: int, z: float) -> float:
    """Modified Bessel function I_nu(z) for nu in {0, 1} by power series.

    The series is truncated once a term drops below 1e-17 of the running
    sum.  Arguments above BESSEL_MAX_ARGUMENT exceed the series budget and
    raise OverflowError.
    """
    if nu not in (0, 1):
        raise ValueError(f"order must be 0 or 1, got {nu}")
    if z < 0:
        raise ValueError(f"argument must be nonnegative, got {z}")
    if z > BESSEL_MAX_ARGUMENT:
        raise OverflowError(
            f"argument {z} exceeds the series budget ({BESSEL_MAX_ARGUMENT})"
        )
    half = z / 2.0
    term = 1.0 if nu == 0 else half
    total = term
    quarter_sq = half * half
    for j in range(500):
        term *= quarter_sq / ((j + 1.0) * (j + 1.0 + nu))
        total += term
        if term <= 1e-17 * total:
            break
    return total


def mixed_limit_density(x: float, theta: float) -> float:
    """Density of the continuous part of the ballistic-scaling limit law.

    f(x) = (theta e^(-theta) / 2) [I_0(theta s) + I_1(theta s) / s] with
    s = sqrt(1 - x^2), defined for |x| < 1 and 0 < theta < 1.
    """
    if not (0.0 < theta < 1.0):
        raise ValueError(f"theta must lie in (0, 1), got {theta}")
    if not abs(x) < 1.0:
        raise ValueError(f"x must lie in (-1, 1), got {x}")
    s = math.sqrt(1.0 - x * x)
    return 0.5 * theta * math.exp(-theta) * (bessel_i(0, theta * s) + bessel_i(1, theta * s) / s)


def _arc_integrand(u: float, theta: float) -> float:
    # Substituting x = sin u absorbs the 1/sqrt(1 - x^2) endpoint blowup.
    cu = math.cos(u)
    return 0.5 * theta * math.exp(-theta) * (bessel_i(0, theta * cu) * cu + bessel_i(1, theta * cu))


@dataclass(frozen=True)
class MixedLimitLaw:
    """Ballistic-scaling limit law: two atoms plus a continuous density.

    The atoms sit at -1 and +1 with masses e^(-theta) * alpha and
    e^(-theta) * beta; the rest of the mass follows mixed_limit_density.
    """

    theta: float
    phi: InitialDistribution

    def __post_init__(self) -> None:
        if not (0.0 < self.theta < 1.0):
            raise ValueError(f"theta must lie in (0, 1), got {self.theta}")

    @property
    def alpha(self) -> float:
        return self.phi.alpha

    @property
    def beta(self) -> float:
        return self.phi.beta

    @property
    def atom_minus1(self) -> float:
        return math.exp(-self.theta) * self.phi.alpha

    @property
    def atom_plus1(self) -> float:
        return math.exp(-self.theta) * self.phi.beta

    def density(self, x: float) -> float:
        return mixed_limit_density(x, self.theta)

    def continuous_mass(self, lo: float = -1.0, hi: float = 1.0) -> float:
        """Integral of the density over [lo, hi] within (-1, 1) bounds."""
        lo = min(max(lo, -1.0), 1.0)
        hi = min(max(hi, -1.0), 1.0)
        if hi <= lo:
            return 0.0
        value, _ = quad(
            _arc_integrand,
            math.asin(lo),
            math.asin(hi),
            args=(self.theta,),
            epsabs=1e-12,
            epsrel=1e-12,
        )
        return value

    def total_mass(self) -> float:
        return self.atom_minus1 + self.atom_plus1 + self.continuous_mass()

    def cdf(self, value: float) -> float:
        """P(Z <= value) for the mixed law (atoms included)."""
        if value < -1.0:
            return 0.0
        total = self.atom_minus1 + self.continuous_mass(-1.0, min(value, 1.0))
        if value >= 1.0:
            total += self.atom_plus1
        return total


class BesselLimitComparison(NamedTuple):
    """Finite-n hypergeometric values beside their Bessel limits."""

    f1_value: float
    f1_limit: float
    f2_value: float
    f2_limit: float


def hyp2f1_bessel_limits(theta: float, x: float, n: int) -> BesselLimitComparison:
    """Finite-n values and limits of the two position-law series weights.

    With a_n = 1 - theta/n and k = round(x*n), the terminating series
    F1 = 2F1(-(k-1), -(n-k-1); 1; z_n) and F2 (third parameter 2) at
    z_n = ((1-a_n)/a_n)^2 converge to I_0(2 theta s) and I_1(2 theta s) /
    (theta s) with s = sqrt(r (1-r)), r = k/n.  Returns all four values
    for convergence diagnostics.
    """
    if not (0.0 < theta < n):
        raise ValueError(f"theta must lie in (0, n), got {theta}")
    if not (0.0 < x < 1.0):
        raise ValueError(f"x must lie in (0, 1), got {x}")
    k = int(round(x * n))
    if k < 1 or n - k < 1:
        raise ValueError(f"round(x*n) = {k} must be an interior step count")
    a_n = 1.0 - theta / n
    z_n = ((1.0 - a_n) / a_n) ** 2
    f1_value = hyp2f1_terminating(-(k - 1), -(n - k - 1), 1, z_n)
    f2_value = hyp2f1_terminating(-(k - 1), -(n - k - 1), 2, z_n)
    r = k / n
    s = theta * math.sqrt(r * (1.0 - r))
    return BesselLimitComparison(
        f1_value=f1_value,
        f1_limit=bessel_i(0, 2.0 * s),
        f2_value=f2_value,
        f2_limit=bessel_i(1, 2.0 * s) / s,
    )


def diffusive_variance(params: WalkParameters) -> float:
    """Variance of the sqrt(n)-scaled limit normal, a / (1 - a).

    Only defined for equal persistence (a = d).
    """
    if params.a != params.d:
        raise ApplicabilityError(
            f"diffusive variance requires a = d, got a={params.a}, d={params.d}"
        )
    return params.a / (1.0 - params.a)


def rescaled_cdf_sup_gap(
    n: int, theta: float, phi: InitialDistribution, n_grid: int = 41
) -> float:
    """Sup distance between the exact law of X_n/n and the mixed limit law.

    Builds the persistence schedule a_n = 1 - theta/n, computes the exact
    n-step law, and compares cumulative probabilities on an evenly spaced
    grid over [-1, 1].
    """
    a_n = 1.0 - theta / n
    dist = distribution(n, WalkParameters(a_n, a_n), phi)
    law = MixedLimitLaw(theta, phi)
    gap = 0.0
    for t in np.linspace(-1.0, 1.0, n_grid):
        # The epsilon keeps lattice sites that land exactly on t*n inside.
        exact_cdf = dist.cdf(t * n + 1e-9)
        gap = max(gap, abs(exact_cdf - law.cdf(t)))
    return gap
