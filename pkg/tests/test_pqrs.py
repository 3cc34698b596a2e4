"""Four-matrix basis: decomposition, composition, and the product table."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corrwalk import (
    BasisMismatchError,
    PqrsMatrix,
    SingularBasisError,
    WalkParameters,
    basis_matrices,
    compose,
    decompose,
    identity_coefficients,
    multiply,
)

PARAMS = WalkParameters(0.3, 0.8)


def coeff_array(m: PqrsMatrix) -> np.ndarray:
    return np.array([m.cp, m.cq, m.cr, m.cs])


def test_basis_matrices_contents():
    l_op, r_op, l_alt, r_alt = basis_matrices(PARAMS)
    a, b, c, d = 0.3, 1 - 0.8, 1 - 0.3, 0.8
    assert np.array_equal(l_op, [[a, b], [0, 0]])
    assert np.array_equal(r_op, [[0, 0], [c, d]])
    assert np.array_equal(l_alt, [[c, d], [0, 0]])
    assert np.array_equal(r_alt, [[0, 0], [a, b]])
    # step matrix splits into its left and right operators
    assert np.array_equal(l_op + r_op, PARAMS.matrix)


def test_round_trip_random_matrices():
    rng = np.random.default_rng(7)
    for _ in range(200):
        mat = rng.normal(size=(2, 2))
        back = compose(decompose(mat, PARAMS))
        assert np.abs(back - mat).max() < 1e-12


def test_multiply_matches_matrix_product():
    rng = np.random.default_rng(8)
    for _ in range(100):
        x = rng.normal(size=(2, 2))
        y = rng.normal(size=(2, 2))
        prod = multiply(decompose(x, PARAMS), decompose(y, PARAMS))
        assert np.abs(prod.to_matrix() - x @ y).max() < 1e-12


def test_all_sixteen_basis_products_exact():
    mats = basis_matrices(PARAMS)
    units = [
        PqrsMatrix(1.0, 0.0, 0.0, 0.0, PARAMS),
        PqrsMatrix(0.0, 1.0, 0.0, 0.0, PARAMS),
        PqrsMatrix(0.0, 0.0, 1.0, 0.0, PARAMS),
        PqrsMatrix(0.0, 0.0, 0.0, 1.0, PARAMS),
    ]
    for i in range(4):
        for j in range(4):
            table = multiply(units[i], units[j]).to_matrix()
            raw = mats[i] @ mats[j]
            assert np.array_equal(table, raw), f"basis product ({i},{j}) not exact"


def test_identity_coefficients():
    ident = identity_coefficients(PARAMS)
    assert np.abs(ident.to_matrix() - np.eye(2)).max() < 1e-15
    # multiplying by the identity coefficients is a no-op
    x = decompose(np.array([[0.4, -1.2], [2.0, 0.9]]), PARAMS)
    left = multiply(ident, x)
    right = multiply(x, ident)
    assert np.abs(coeff_array(left) - coeff_array(x)).max() < 1e-14
    assert np.abs(coeff_array(right) - coeff_array(x)).max() < 1e-14


def test_add_sub_scale():
    x = PqrsMatrix(1.0, 2.0, 3.0, 4.0, PARAMS)
    y = PqrsMatrix(0.5, -1.0, 0.0, 2.0, PARAMS)
    assert coeff_array(x + y).tolist() == [1.5, 1.0, 3.0, 6.0]
    assert coeff_array(x - y).tolist() == [0.5, 3.0, 3.0, 2.0]
    assert coeff_array(x.scale(2.0)).tolist() == [2.0, 4.0, 6.0, 8.0]
    assert np.abs((x + y).to_matrix() - (x.to_matrix() + y.to_matrix())).max() < 1e-15


def test_singular_basis_rejected():
    singular = WalkParameters(0.4, 0.6)
    assert singular.is_singular_basis
    with pytest.raises(SingularBasisError):
        decompose(np.eye(2), singular)
    with pytest.raises(SingularBasisError):
        identity_coefficients(singular)
    x = PqrsMatrix(1.0, 0.0, 0.0, 0.0, singular)
    with pytest.raises(SingularBasisError):
        multiply(x, x)


def test_basis_mismatch_rejected():
    other = WalkParameters(0.31, 0.8)
    x = PqrsMatrix(1.0, 0.0, 0.0, 0.0, PARAMS)
    y = PqrsMatrix(1.0, 0.0, 0.0, 0.0, other)
    with pytest.raises(BasisMismatchError):
        x + y
    with pytest.raises(BasisMismatchError):
        multiply(x, y)


def test_decompose_rejects_bad_shape():
    with pytest.raises(ValueError):
        decompose(np.zeros((3, 3)), PARAMS)


@settings(max_examples=60, deadline=None)
@given(
    a=st.floats(0.05, 0.95),
    d=st.floats(0.05, 0.95),
    entries=st.lists(st.floats(-10, 10), min_size=4, max_size=4),
)
def test_round_trip_property(a, d, entries):
    params = WalkParameters(a, d)
    if abs(params.delta) < 1e-3:
        return
    mat = np.array(entries).reshape(2, 2)
    back = compose(decompose(mat, params))
    assert np.abs(back - mat).max() < 1e-10 * max(1.0, np.abs(mat).max())


@settings(max_examples=60, deadline=None)
@given(a=st.floats(0.05, 0.95), d=st.floats(0.05, 0.95))
def test_multiply_property(a, d):
    params = WalkParameters(a, d)
    if abs(params.delta) < 1e-3:
        return
    rng = np.random.default_rng(3)
    x = rng.normal(size=(2, 2))
    y = rng.normal(size=(2, 2))
    prod = multiply(decompose(x, params), decompose(y, params))
    assert np.abs(prod.to_matrix() - x @ y).max() < 1e-9
