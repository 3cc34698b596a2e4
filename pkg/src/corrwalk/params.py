"""Walk parameters and initial chirality distribution.

A correlated walk on the 1-D integer lattice keeps one bit of memory: the
direction of its previous step (its chirality, L or R).  The step law is a
2x2 column-stochastic matrix

    A = [[a, b],
         [c, d]],   b = 1 - d,  c = 1 - a,

where column j gives the next-chirality distribution conditional on current
chirality j (column order L, R; row order L, R).  So `a` is the probability
of repeating a left step and `d` of repeating a right step.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

#: Determinant threshold below which the four step matrices no longer span
#: M2(R) and any decomposition onto them is refused.
SINGULAR_DELTA_TOL = 1e-12


@dataclass(frozen=True)
class WalkParameters:
    """Persistence probabilities of a two-state correlated walk.

    ``a`` is P(step left | last step left), ``d`` is P(step right | last
    step right).  Both must lie strictly inside (0, 1) so every one-step
    transition has positive probability.
    """

    a: float
    d: float

    def __post_init__(self) -> None:
        a = float(self.a)
        d = float(self.d)
        if not (0.0 < a < 1.0):
            raise ValueError(f"persistence a must lie in (0, 1), got {a}")
        if not (0.0 < d < 1.0):
            raise ValueError(f"persistence d must lie in (0, 1), got {d}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "d", d)

    @property
    def b(self) -> float:
        """P(step left | last step right)."""
        return 1.0 - self.d

    @property
    def c(self) -> float:
        """P(step right | last step left)."""
        return 1.0 - self.a

    @property
    def delta(self) -> float:
        """Determinant of the step matrix, equal to a + d - 1 exactly."""
        return self.a + self.d - 1.0

    @property
    def persistence_ratio(self) -> float:
        """The ratio bc / (ad) controlling the interior path weights."""
        return (self.b * self.c) / (self.a * self.d)

    @property
    def is_singular_basis(self) -> bool:
        """True when |delta| is too small for the matrix basis to span M2."""
        return abs(self.delta) < SINGULAR_DELTA_TOL

    @property
    def matrix(self) -> np.ndarray:
        """The 2x2 column-stochastic step matrix [[a, b], [c, d]]."""
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=np.float64)


@dataclass(frozen=True)
class InitialDistribution:
    """Distribution (alpha, beta) of the walk's initial chirality.

    ``alpha`` is the probability that the imagined step into the origin was
    a left step; ``beta`` the complement.  ``beta`` defaults to 1 - alpha.
    """

    alpha: float
    beta: float = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        alpha = float(self.alpha)
        beta = 1.0 - alpha if self.beta is None else float(self.beta)
        if not (0.0 <= alpha <= 1.0):
            raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
        if not (0.0 <= beta <= 1.0):
            raise ValueError(f"beta must lie in [0, 1], got {beta}")
        if abs(alpha + beta - 1.0) > 1e-12:
            raise ValueError(f"alpha + beta must equal 1, got {alpha + beta}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @property
    def vector(self) -> np.ndarray:
        """The chirality distribution as a length-2 array (L, R)."""
        return np.array([self.alpha, self.beta], dtype=np.float64)
