"""Characteristic function, moments, and symmetry classification."""

import numpy as np
import pytest

from corrwalk import (
    InitialDistribution,
    WalkParameters,
    characteristic_function,
    distribution,
    is_symmetric,
    is_symmetric_closed_form,
    moment,
)

PARAMS = WalkParameters(0.3, 0.8)
PHI = InitialDistribution(0.4)


def direct_cf(n, angle, params, phi):
    dist = distribution(n, params, phi)
    return complex(np.sum(dist.probabilities * np.exp(1j * angle * dist.positions)))


def test_cf_matches_direct_sum():
    for n in (1, 5, 18):
        for angle in (0.0, 0.3, -1.1, 2.9, np.pi):
            got = characteristic_function(n, angle, PARAMS, PHI)
            want = direct_cf(n, angle, PARAMS, PHI)
            assert abs(got - want) < 1e-12


def test_cf_basic_identities():
    n = 12
    at_zero = characteristic_function(n, 0.0, PARAMS, PHI)
    assert abs(at_zero - 1.0) < 1e-12 and at_zero.imag == 0.0
    for angle in np.linspace(-np.pi, np.pi, 17):
        value = characteristic_function(n, float(angle), PARAMS, PHI)
        conj = characteristic_function(n, float(-angle), PARAMS, PHI)
        assert abs(value - conj.conjugate()) < 1e-14
        assert abs(value) <= 1.0 + 1e-10


def test_cf_exactly_real_in_symmetric_case():
    params = WalkParameters(0.6, 0.6)
    phi = InitialDistribution(0.5)
    for angle in (0.4, 1.3, 2.2):
        value = characteristic_function(15, angle, params, phi)
        assert value.imag == 0.0


def test_moments_match_direct_sums():
    for n in (2, 9, 20):
        dist = distribution(n, PARAMS, PHI)
        xs = dist.positions.astype(float)
        for order in (1, 2, 3, 4):
            want = float(np.sum(dist.probabilities * xs ** order))
            got = moment(n, order, PARAMS, PHI)
            assert abs(got - want) <= 1e-8 * max(abs(want), 1.0)


def test_first_moment_single_step():
    # E[X_1] = P(right) - P(left) = 1 - 2 P(left)
    p_left = PARAMS.a * PHI.alpha + PARAMS.b * PHI.beta
    assert abs(moment(1, 1, PARAMS, PHI) - (1.0 - 2.0 * p_left)) < 1e-15


def test_odd_moments_vanish_exactly_when_symmetric():
    params = WalkParameters(0.6, 0.6)
    phi = InitialDistribution(0.5)
    for n in (7, 16, 21):
        assert moment(n, 1, params, phi) == 0.0
        assert moment(n, 3, params, phi) == 0.0


def test_symmetry_closed_form_cases():
    # a = d = 1/2 is symmetric for every initial mix
    assert is_symmetric_closed_form(WalkParameters(0.5, 0.5), InitialDistribution(0.9))
    # a = d with the balanced mix
    assert is_symmetric_closed_form(WalkParameters(0.7, 0.7), InitialDistribution(0.5))
    # a = d with an unbalanced mix is skewed
    assert not is_symmetric_closed_form(WalkParameters(0.7, 0.7), InitialDistribution(0.6))
    # a != d is never symmetric
    assert not is_symmetric_closed_form(WalkParameters(0.3, 0.8), InitialDistribution(0.5))


def test_symmetry_empirical_agrees_on_spot_grid():
    for a in (0.25, 0.5, 0.75):
        for d in (0.25, 0.5, 0.75):
            for alpha in (0.0, 0.5, 1.0):
                params = WalkParameters(a, d)
                phi = InitialDistribution(alpha)
                closed = is_symmetric_closed_form(params, phi)
                empirical = is_symmetric(params, phi, horizon=10)
                assert closed == empirical, (a, d, alpha)


def test_validation():
    with pytest.raises(ValueError):
        moment(5, 0, PARAMS, PHI)
    with pytest.raises(ValueError):
        moment(0, 2, PARAMS, PHI)
    with pytest.raises(ValueError):
        is_symmetric(PARAMS, PHI, horizon=0)
