"""Exact distributions, limit laws, and absorption for 1-D correlated walks.

A correlated (persistent) walk keeps stepping in its current direction
with a direction-dependent probability.  This package evaluates its
finite-time position law exactly through a four-matrix path algebra,
derives characteristic functions and moments, checks the diffusive and
ballistic limit laws, and solves absorption problems on finite and
half-infinite site ranges.  Seeded Monte Carlo simulation is included as
an independent cross-check of every exact formula.
"""

from ._kernels import BACKEND
from .absorption import (
    MAX_INFINITE_SITES,
    MAX_SERIES_ORDER,
    TRUNCATION_BUDGET,
    AbsorptionResult,
    BoundarySpec,
    TruncatedAbsorption,
    absorb_closed_form,
    absorb_infinite,
    absorb_linear_system,
    absorb_truncated_paths,
    first_passage_probabilities,
    generating_function_coefficients,
    lambda_roots,
)
from .errors import (
    ApplicabilityError,
    BasisMismatchError,
    BudgetExceededError,
    CorrwalkError,
    NonConvergenceError,
    SingularBasisError,
)
from .exact import (
    ENUMERATION_MAX_STEPS,
    Distribution,
    distribution,
    distribution_bruteforce,
    hyp2f1_terminating,
    path_matrix,
    path_matrix_bruteforce,
    path_sum,
    path_sum_bruteforce,
)
from .limits import (
    BESSEL_MAX_ARGUMENT,
    BesselLimitComparison,
    MixedLimitLaw,
    bessel_i,
    diffusive_variance,
    hyp2f1_bessel_limits,
    mixed_limit_density,
    rescaled_cdf_sup_gap,
)
from .montecarlo import SampleStats, SimulationConfig, simulate_absorption, simulate_walk
from .params import InitialDistribution, WalkParameters
from .pqrs import (
    PqrsMatrix,
    basis_matrices,
    compose,
    decompose,
    identity_coefficients,
    multiply,
)
from .spectral import (
    characteristic_function,
    is_symmetric,
    is_symmetric_closed_form,
    moment,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "__version__",
    "ApplicabilityError",
    "BasisMismatchError",
    "BudgetExceededError",
    "CorrwalkError",
    "NonConvergenceError",
    "SingularBasisError",
    "WalkParameters",
    "InitialDistribution",
    "PqrsMatrix",
    "basis_matrices",
    "compose",
    "decompose",
    "identity_coefficients",
    "multiply",
    "ENUMERATION_MAX_STEPS",
    "Distribution",
    "distribution",
    "distribution_bruteforce",
    "hyp2f1_terminating",
    "path_matrix",
    "path_matrix_bruteforce",
    "path_sum",
    "path_sum_bruteforce",
    "characteristic_function",
    "moment",
    "is_symmetric",
    "is_symmetric_closed_form",
    "BESSEL_MAX_ARGUMENT",
    "BesselLimitComparison",
    "MixedLimitLaw",
    "bessel_i",
    "diffusive_variance",
    "hyp2f1_bessel_limits",
    "mixed_limit_density",
    "rescaled_cdf_sup_gap",
    "MAX_INFINITE_SITES",
    "MAX_SERIES_ORDER",
    "TRUNCATION_BUDGET",
    "AbsorptionResult",
    "BoundarySpec",
    "TruncatedAbsorption",
    "absorb_closed_form",
    "absorb_infinite",
    "absorb_linear_system",
    "absorb_truncated_paths",
    "first_passage_probabilities",
    "generating_function_coefficients",
    "lambda_roots",
    "SampleStats",
    "SimulationConfig",
    "simulate_absorption",
    "simulate_walk",
]
