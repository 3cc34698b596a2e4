"""Seeded simulation: determinism, counting, and agreement with exact laws."""

import math

import numpy as np
import pytest

from corrwalk import (
    BoundarySpec,
    InitialDistribution,
    SimulationConfig,
    WalkParameters,
    absorb_linear_system,
    distribution,
    simulate_absorption,
    simulate_walk,
)

PARAMS = WalkParameters(0.3, 0.8)
PHI = InitialDistribution(0.4)


def walk_config(**kw):
    base = dict(params=PARAMS, phi=PHI, n_steps=10, n_samples=20_000, seed=11)
    base.update(kw)
    return SimulationConfig(**base)


def test_walk_determinism():
    s1 = simulate_walk(walk_config())
    s2 = simulate_walk(walk_config())
    assert s1.histogram == s2.histogram
    assert s1.mean == s2.mean and s1.variance == s2.variance
    s3 = simulate_walk(walk_config(seed=12))
    assert s3.histogram != s1.histogram


def test_walk_counts_and_support():
    stats = simulate_walk(walk_config())
    assert sum(stats.histogram.values()) == 20_000
    assert set(stats.histogram) == {2 * i - 10 for i in range(11)}
    positions = np.repeat(list(stats.histogram.keys()), list(stats.histogram.values()))
    assert stats.mean == pytest.approx(positions.mean(), abs=1e-12)
    assert stats.variance == pytest.approx(positions.var(), abs=1e-12)


def test_walk_matches_exact_bands():
    config = walk_config(n_steps=8, n_samples=200_000, seed=5)
    stats = simulate_walk(config)
    dist = distribution(8, PARAMS, PHI)
    for pos, p in zip(dist.positions, dist.probabilities):
        count = stats.histogram[int(pos)]
        sigma = math.sqrt(config.n_samples * p * (1.0 - p))
        assert abs(count - config.n_samples * p) <= 4.0 * sigma


def test_absorption_finite():
    config = SimulationConfig(
        PARAMS, PHI, n_steps=500, n_samples=100_000, seed=3,
        boundary=BoundarySpec(6), start=3,
    )
    stats = simulate_absorption(config)
    assert stats.absorbed_at_0 + stats.absorbed_at_boundary + stats.censored == 100_000
    assert stats.censored == 0  # 500 steps is plenty for a six-site corridor
    exact = absorb_linear_system(6, PARAMS, PHI, 3).prob_hit_0
    sigma = math.sqrt(exact * (1.0 - exact) / config.n_samples)
    assert abs(stats.absorbed_at_0_fraction - exact) <= 4.0 * sigma


def test_absorption_infinite():
    config = SimulationConfig(
        PARAMS, PHI, n_steps=2000, n_samples=50_000, seed=17,
        boundary=BoundarySpec(), start=2,
    )
    stats = simulate_absorption(config)
    assert stats.absorbed_at_boundary == 0
    assert stats.censored > 0  # right-drifting walkers never absorb
    # censored trajectories sit far from the origin after 2000 steps
    assert all(pos == 0 or pos > 100 for pos in stats.histogram)


def test_config_validation():
    with pytest.raises(ValueError):
        walk_config(n_steps=0)
    with pytest.raises(ValueError):
        walk_config(n_samples=0)
    with pytest.raises(ValueError):
        walk_config(seed=1.5)
    with pytest.raises(ValueError):
        walk_config(start=2)  # start only meaningful with a boundary
    with pytest.raises(ValueError):
        SimulationConfig(PARAMS, PHI, n_steps=5, n_samples=10, seed=1,
                         boundary=BoundarySpec(6), start=0)
    with pytest.raises(ValueError):
        SimulationConfig(PARAMS, PHI, n_steps=5, n_samples=10, seed=1,
                         boundary=BoundarySpec(), start=0)


def test_mode_mismatch_rejected():
    with pytest.raises(ValueError):
        simulate_absorption(walk_config())
    config = SimulationConfig(PARAMS, PHI, n_steps=5, n_samples=10, seed=1,
                              boundary=BoundarySpec(6), start=3)
    with pytest.raises(ValueError):
        simulate_walk(config)


def test_negative_seed_accepted():
    stats = simulate_walk(walk_config(seed=-123))
    assert sum(stats.histogram.values()) == 20_000
