"""Seeded Monte Carlo simulation of the walk, for statistical validation.

Each trajectory draws from its own counter-based random stream derived
from (seed, trajectory index), so aggregate results are bit-identical
across backends and independent of execution order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels as kernels
from .absorption import BoundarySpec
from .params import InitialDistribution, WalkParameters

_SEED_MASK = 0xFFFFFFFFFFFFFFFF


@dataclass(frozen=True)
class SimulationConfig:
    """Full description of a simulation run; identical configs give
    identical outputs, bit for bit.

    ``n_steps`` is the trajectory length for free walks and the step
    budget for absorption runs.  ``boundary``/``start`` are only used by
    simulate_absorption.
    """

    params: WalkParameters
    phi: InitialDistribution
    n_steps: int
    n_samples: int
    seed: int
    boundary: Optional[BoundarySpec] = None
    start: int = 0

    def __post_init__(self) -> None:
        if self.n_steps != int(self.n_steps) or self.n_steps < 1:
            raise ValueError(f"n_steps must be a positive integer, got {self.n_steps}")
        if self.n_samples != int(self.n_samples) or self.n_samples < 1:
            raise ValueError(
                f"n_samples must be a positive integer, got {self.n_samples}"
            )
        if self.seed != int(self.seed):
            raise ValueError(f"seed must be an integer, got {self.seed}")
        object.__setattr__(self, "n_steps", int(self.n_steps))
        object.__setattr__(self, "n_samples", int(self.n_samples))
        object.__setattr__(self, "seed", int(self.seed))
        object.__setattr__(self, "start", int(self.start))
        if self.boundary is None:
            if self.start != 0:
                raise ValueError("free walks start at 0")
        else:
            upper = self.boundary.n_sites
            if upper is None:
                if self.start < 1:
                    raise ValueError("half-line absorption needs start >= 1")
            elif not 1 <= self.start <= upper - 1:
                raise ValueError(
                    f"start must be interior (1..{upper - 1}), got {self.start}"
                )

    @property
    def seed64(self) -> np.uint64:
        return np.uint64(self.seed & _SEED_MASK)


@dataclass(frozen=True)
class SampleStats:
    """Aggregate statistics over the sampled final positions.

    ``histogram`` maps position to count; for free walks it covers every
    parity-consistent lattice site (zero counts included), for absorption
    runs the observed final sites.  The absorption counters are None for
    free-walk runs; absorbed plus censored counts always total n_samples.
    """

    n_samples: int
    mean: float
    variance: float
    histogram: dict[int, int]
    absorbed_at_0: Optional[int] = None
    absorbed_at_boundary: Optional[int] = None
    censored: Optional[int] = None

    @property
    def absorbed_at_0_fraction(self) -> Optional[float]:
        if self.absorbed_at_0 is None:
            return None
        return self.absorbed_at_0 / self.n_samples


def simulate_walk(config: SimulationConfig) -> SampleStats:
    """Sample n_samples independent n_steps-step walks and aggregate.

    The initial chirality of each trajectory is drawn from phi, so the
    first step moves left with probability a*alpha + b*beta.
    """
    if config.boundary is not None:
        raise ValueError("simulate_walk takes no boundary; use simulate_absorption")
    params, n = config.params, config.n_steps
    positions = kernels.walk_final_positions(
        params.a, params.d, config.phi.alpha, n, config.n_samples, config.seed64
    )
    counts = np.bincount(positions + n, minlength=2 * n + 1)
    histogram = {2 * i - n: int(counts[2 * i]) for i in range(n + 1)}
    return SampleStats(
        n_samples=config.n_samples,
        mean=float(positions.mean()),
        variance=float(positions.var()),
        histogram=histogram,
    )


def simulate_absorption(config: SimulationConfig) -> SampleStats:
    """Run walks from config.start until absorption or the step budget.

    Walks still unabsorbed after n_steps are counted as censored, never as
    absorbed; the histogram records final positions (0 and the far
    boundary are the absorbed ones, interior sites are censored walks).
    """
    if config.boundary is None:
        raise ValueError("simulate_absorption requires a boundary")
    params = config.params
    n_sites = -1 if config.boundary.is_infinite else config.boundary.n_sites
    finals = kernels.absorb_final_positions(
        params.a,
        params.d,
        config.phi.alpha,
        n_sites,
        config.start,
        config.n_steps,
        config.n_samples,
        config.seed64,
    )
    values, counts = np.unique(finals, return_counts=True)
    histogram = {int(v): int(cnt) for v, cnt in zip(values, counts)}
    absorbed_at_0 = histogram.get(0, 0)
    absorbed_at_boundary = 0 if n_sites < 0 else histogram.get(n_sites, 0)
    return SampleStats(
        n_samples=config.n_samples,
        mean=float(finals.mean()),
        variance=float(finals.var()),
        histogram=histogram,
        absorbed_at_0=absorbed_at_0,
        absorbed_at_boundary=absorbed_at_boundary,
        censored=config.n_samples - absorbed_at_0 - absorbed_at_boundary,
    )
