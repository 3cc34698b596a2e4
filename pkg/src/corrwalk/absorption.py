"""Absorption at boundaries: exact hitting probabilities and their oracles.

The walk lives on sites 0..N (or on the half line when the boundary is
infinite), with site 0 absorbing and, in the finite case, site N absorbing
too.  The central quantity is the probability of being absorbed at 0 as a
function of the start site and the initial chirality weights.

Routes implemented here:
  - a banded linear system over (site, chirality) states, exact for any
    parameters (the production path);
  - a closed form for equal persistence a = d;
  - an N-doubling limit with Richardson acceleration for the infinite
    boundary;
  - truncated dynamic programming over (site, chirality, time) and
    generating-function series expansions, used as oracles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

import numpy as np
from scipy.linalg import solve_banded

from .errors import (
    ApplicabilityError,
    BudgetExceededError,
    NonConvergenceError,
    SingularBasisError,
)
from .params import InitialDistribution, WalkParameters

#: Budget for the (site, chirality, time) dynamic program: sites * horizon.
TRUNCATION_BUDGET = 50_000_000

#: Largest series order the generating-function expansion supports.
MAX_SERIES_ORDER = 64

#: Boundary-size cap for the infinite-boundary limit.
MAX_INFINITE_SITES = 1_000_000


@dataclass(frozen=True)
class BoundarySpec:
    """Absorbing-boundary layout: sites 0 and n_sites, or 0 alone.

    ``n_sites=None`` means the half-line case with only site 0 absorbing.
    Finite boundaries need n_sites >= 2 so an interior exists.
    """

    n_sites: Optional[int] = None

    def __post_init__(self) -> None:
        if self.n_sites is not None:
            if self.n_sites != int(self.n_sites) or self.n_sites < 2:
                raise ValueError(
                    f"a finite boundary needs n_sites >= 2, got {self.n_sites}"
                )
            object.__setattr__(self, "n_sites", int(self.n_sites))

    @property
    def is_infinite(self) -> bool:
        return self.n_sites is None


@dataclass(frozen=True)
class AbsorptionResult:
    """Probability of absorption at site 0, with provenance.

    ``n_sites`` is None for the infinite-boundary case.  ``diagnostics``
    may carry method-specific extras (convergence data, benchmarks).
    """

    start: int
    phi: InitialDistribution
    prob_hit_0: float
    method: str
    n_sites: Optional[int] = None
    diagnostics: Optional[dict] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not -1e-12 <= self.prob_hit_0 <= 1.0 + 1e-12:
            raise ValueError(
                f"absorption probability out of range: {self.prob_hit_0!r}"
            )


def _check_finite_boundary(n_sites: int, start: int) -> tuple[int, int]:
    if n_sites != int(n_sites) or n_sites < 2:
        raise ValueError(f"n_sites must be an integer >= 2, got {n_sites}")
    n_sites = int(n_sites)
    if start != int(start) or not 0 <= start <= n_sites:
        raise ValueError(f"start must lie in 0..{n_sites}, got {start}")
    return n_sites, int(start)


def absorb_closed_form(
    n_sites: int, start: int, params: WalkParameters, phi: InitialDistribution
) -> AbsorptionResult:
    """Absorption probability at 0 for equal persistence, in closed form.

    For a = d and interior start k the probability is
    ((1-a)(N-k) + (2a-1) alpha) / ((1-a) N + 2a - 1), which reduces to
    1 - k/N at a = 1/2.  Raises ApplicabilityError when a != d.
    """
    if params.a != params.d:
        raise ApplicabilityError(
            f"closed form requires a = d, got a={params.a}, d={params.d}"
        )
    n_sites, start = _check_finite_boundary(n_sites, start)
    if start == 0:
        value = 1.0
    elif start == n_sites:
        value = 0.0
    else:
        a = params.a
        value = ((1.0 - a) * (n_sites - start) + (2.0 * a - 1.0) * phi.alpha) / (
            (1.0 - a) * n_sites + 2.0 * a - 1.0
        )
    return AbsorptionResult(start, phi, value, "closed_form", n_sites)


def absorb_linear_system(
    n_sites: int, params: WalkParameters, phi: InitialDistribution, start: int
) -> AbsorptionResult:
    """Absorption probability at 0 from the stationary first-passage system.

    Unknowns are h(site, chirality) = P(hit 0 before N | state), satisfying

        h(s, L) = a h(s-1, L) + c h(s+1, R)
        h(s, R) = b h(s-1, L) + d h(s+1, R)

    with h(0, .) = 1 and h(N, .) = 0.  The system is banded (bandwidth 3)
    in the interleaved (site, chirality) ordering and solved directly; the
    result is alpha h(k, L) + beta h(k, R).
    """
    n_sites, start = _check_finite_boundary(n_sites, start)
    if start == 0:
        return AbsorptionResult(0, phi, 1.0, "linear_system", n_sites)
    if start == n_sites:
        return AbsorptionResult(start, phi, 0.0, "linear_system", n_sites)
    a, b, c, d = params.a, params.b, params.c, params.d
    size = 2 * (n_sites - 1)
    bands = np.zeros((7, size))
    rhs = np.zeros(size)
    for s in range(1, n_sites):
        row_l = 2 * s - 2
        row_r = 2 * s - 1
        bands[3, row_l] = 1.0
        bands[3, row_r] = 1.0
        if s >= 2:
            bands[5, 2 * s - 4] = -a  # h(s, L) couples to h(s-1, L)
            bands[6, 2 * s - 4] = -b  # h(s, R) couples to h(s-1, L)
        else:
            rhs[row_l] = a  # h(0, L) = 1
            rhs[row_r] = b
        if s <= n_sites - 2:
            bands[0, 2 * s + 1] = -c  # h(s, L) couples to h(s+1, R)
            bands[1, 2 * s + 1] = -d  # h(s, R) couples to h(s+1, R)
    solution = solve_banded((3, 3), bands, rhs)
    value = phi.alpha * solution[2 * start - 2] + phi.beta * solution[2 * start - 1]
    return AbsorptionResult(start, phi, float(value), "linear_system", n_sites)


def _infinite_geometric_benchmark(
    params: WalkParameters, phi: InitialDistribution, start: int
) -> float:
    """Half-line absorption probability from the geometric-mode ansatz.

    For a >= d absorption is certain.  For a < d the bounded decaying mode
    gives (a/d)^k (alpha + beta d b / (a c)).  Used as a diagnostic
    cross-check of the N -> infinity limit, not as the production value.
    """
    a, b, c, d = params.a, params.b, params.c, params.d
    if a >= d:
        return 1.0
    ratio = a / d
    return ratio**start * (phi.alpha + phi.beta * d * b / (a * c))


def lambda_roots(params: WalkParameters, z: float) -> tuple[float, float]:
    """Roots of the spatial recurrence's characteristic equation at z.

    Returns (lambda_plus, lambda_minus) with lambda_plus taking the minus
    branch of the square root; at z = 1 lambda_plus equals min(1, a/d).
    Raises ValueError where the discriminant is negative.
    """
    a, d = params.a, params.d
    delta = params.delta
    disc = delta**2 * z**4 - 2.0 * (a * d + params.b * params.c) * z**2 + 1.0
    if disc < 0:
        raise ValueError(f"complex roots at z={z}; discriminant {disc}")
    root = np.sqrt(disc)
    lam_plus = (delta * z**2 + 1.0 - root) / (2.0 * d * z)
    lam_minus = (delta * z**2 + 1.0 + root) / (2.0 * d * z)
    return float(lam_plus), float(lam_minus)


def absorb_infinite(
    params: WalkParameters,
    phi: InitialDistribution,
    start: int,
    tolerance: float = 1e-8,
) -> AbsorptionResult:
    """Absorption probability at 0 with no far boundary.

    Computed as the limit of the finite-boundary linear system with the
    boundary doubling from 8.  Plain doubling converges only like 1/N when
    a = d, so successive values are Richardson-extrapolated (2 v(2N) -
    v(N) cancels the 1/N term); convergence is declared after two
    successive extrapolant agreements within the tolerance.  Raises
    NonConvergenceError once the boundary would exceed MAX_INFINITE_SITES.
    """
    if start != int(start) or start < 0:
        raise ValueError(f"start must be a nonnegative integer, got {start}")
    start = int(start)
    diagnostics = {
        "geometric_benchmark": _infinite_geometric_benchmark(params, phi, start),
        "lambda_plus": lambda_roots(params, 1.0)[0],
    }
    if start == 0:
        diagnostics["n_sites_final"] = 0
        return AbsorptionResult(0, phi, 1.0, "linear_system", None, diagnostics)
    n_sites = 8
    while n_sites <= start + 1:
        n_sites *= 2
    prev_value = None
    prev_extrap = None
    agreements = 0
    while n_sites <= MAX_INFINITE_SITES:
        value = absorb_linear_system(n_sites, params, phi, start).prob_hit_0
        if prev_value is not None:
            extrap = 2.0 * value - prev_value
            if prev_extrap is not None:
                if abs(extrap - prev_extrap) < tolerance:
                    agreements += 1
                else:
                    agreements = 0
                if agreements >= 2:
                    diagnostics["n_sites_final"] = n_sites
                    result = min(max(extrap, 0.0), 1.0)
                    return AbsorptionResult(
                        start, phi, result, "linear_system", None, diagnostics
                    )
            prev_extrap = extrap
        prev_value = value
        n_sites *= 2
    raise NonConvergenceError(
        f"half-line absorption did not stabilize below boundary size "
        f"{MAX_INFINITE_SITES} (tolerance {tolerance})"
    )


class TruncatedAbsorption(NamedTuple):
    """Time-truncated absorption estimate with its truncation slack."""

    lower_bound: float
    unabsorbed_mass: float


def _first_passage_dp(
    n_sites: int,
    params: WalkParameters,
    phi: InitialDistribution,
    start: int,
    horizon: int,
) -> tuple[np.ndarray, float]:
    """Dynamic program over (site, chirality, time).

    Returns (series, unabsorbed) where series[t] is the probability of
    first absorption at site 0 exactly at time t, and unabsorbed is the
    interior mass remaining after the horizon.
    """
    if horizon != int(horizon) or horizon < 1:
        raise ValueError(f"horizon must be a positive integer, got {horizon}")
    horizon = int(horizon)
    n_sites, start = _check_finite_boundary(n_sites, start)
    if not 1 <= start <= n_sites - 1:
        raise ValueError(f"start must be interior (1..{n_sites - 1}), got {start}")
    if (n_sites + 1) * horizon > TRUNCATION_BUDGET:
        raise BudgetExceededError(
            f"(sites+1) * horizon = {(n_sites + 1) * horizon} exceeds the "
            f"{TRUNCATION_BUDGET} dynamic-programming budget"
        )
    a, b, c, d = params.a, params.b, params.c, params.d
    lmass = np.zeros(n_sites + 1)
    rmass = np.zeros(n_sites + 1)
    lmass[start] = phi.alpha
    rmass[start] = phi.beta
    series = np.zeros(horizon + 1)
    for t in range(1, horizon + 1):
        new_l = np.zeros(n_sites + 1)
        new_r = np.zeros(n_sites + 1)
        new_l[:-1] = a * lmass[1:] + b * rmass[1:]
        new_r[1:] = c * lmass[:-1] + d * rmass[:-1]
        series[t] = new_l[0]
        new_l[0] = 0.0  # absorbed mass stops moving
        new_r[n_sites] = 0.0
        lmass, rmass = new_l, new_r
    unabsorbed = float(lmass.sum() + rmass.sum())
    return series, unabsorbed


def first_passage_probabilities(
    n_sites: int,
    params: WalkParameters,
    phi: InitialDistribution,
    start: int,
    horizon: int,
) -> np.ndarray:
    """P(first absorption at site 0 happens exactly at time t), t = 0..horizon.

    Computed by direct dynamic programming; the independent oracle for the
    generating-function coefficients.
    """
    series, _ = _first_passage_dp(n_sites, params, phi, start, horizon)
    return series


def absorb_truncated_paths(
    n_sites: int,
    params: WalkParameters,
    phi: InitialDistribution,
    start: int,
    horizon: int,
) -> TruncatedAbsorption:
    """Lower bound on absorption at 0 from paths of length <= horizon.

    The unabsorbed interior mass at the horizon bounds the truncation
    error: the true probability lies in [lower_bound, lower_bound +
    unabsorbed_mass].
    """
    series, unabsorbed = _first_passage_dp(n_sites, params, phi, start, horizon)
    return TruncatedAbsorption(float(series.sum()), unabsorbed)


def generating_function_coefficients(
    n_sites: int, params: WalkParameters, start: int, order: int
) -> tuple[np.ndarray, np.ndarray]:
    """Series coefficients of the two first-passage generating functions.

    The pair (p_k, r_k) gives the coefficients, on the left-step and
    swapped-row basis channels, of the operator sum over paths first
    absorbed at 0 at time t; entry t of each returned array is the
    coefficient of z^t.  Built by iterating the coupled recurrences

        p_k(t) = a p_{k-1}(t-1) + c r_{k-1}(t-1)
        r_k(t) = b p_{k+1}(t-1) + d r_{k+1}(t-1)

    from the boundary data p_0(0) = d/delta, r_0(0) = -b/delta (the
    identity's basis coefficients), with all other boundary entries zero.
    Each sweep stabilizes one more time level, so order+1 sweeps suffice.
    """
    if order != int(order) or order < 0:
        raise ValueError(f"order must be a nonnegative integer, got {order}")
    order = int(order)
    if order > MAX_SERIES_ORDER:
        raise BudgetExceededError(
            f"series order {order} exceeds the {MAX_SERIES_ORDER} budget"
        )
    if params.is_singular_basis:
        raise SingularBasisError(
            "generating-function boundary data divides by the basis determinant"
        )
    n_sites, start = _check_finite_boundary(n_sites, start)
    a, b, c, d = params.a, params.b, params.c, params.d
    delta = params.delta
    p = np.zeros((n_sites + 1, order + 1))
    r = np.zeros((n_sites + 1, order + 1))
    p[0, 0] = d / delta
    r[0, 0] = -b / delta
    for _ in range(order + 1):
        new_p = np.zeros_like(p)
        new_r = np.zeros_like(r)
        new_p[0, 0] = d / delta
        new_r[0, 0] = -b / delta
        new_p[1:n_sites, 1:] = a * p[0 : n_sites - 1, :-1] + c * r[0 : n_sites - 1, :-1]
        new_r[1:n_sites, 1:] = b * p[2 : n_sites + 1, :-1] + d * r[2 : n_sites + 1, :-1]
        p, r = new_p, new_r
    return p[start].copy(), r[start].copy()
