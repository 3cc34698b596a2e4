"""The four-matrix basis generated by the walk's step operators.

Splitting the step matrix A = [[a, b], [c, d]] by the direction of the step
being taken gives the left-step and right-step operators

    L_OP = [[a, b], [0, 0]]      (top row of A)
    R_OP = [[0, 0], [c, d]]      (bottom row of A)

Products of these two matrices close over a four-element family: the two
above plus the "swapped row" companions

    L_ALT = [[c, d], [0, 0]]
    R_ALT = [[0, 0], [a, b]]

Whenever delta = det A = a + d - 1 is nonzero the four span M2(R), so any
real 2x2 matrix has a unique coefficient vector over them.  Sums of n-step
path products can then be manipulated through their coefficients alone,
which is what the exact distribution code does.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BasisMismatchError, SingularBasisError
from .params import WalkParameters


def basis_matrices(params: WalkParameters) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Return the four basis matrices (L_OP, R_OP, L_ALT, R_ALT)."""
    a, b, c, d = params.a, params.b, params.c, params.d
    l_op = np.array([[a, b], [0.0, 0.0]])
    r_op = np.array([[0.0, 0.0], [c, d]])
    l_alt = np.array([[c, d], [0.0, 0.0]])
    r_alt = np.array([[0.0, 0.0], [a, b]])
    return l_op, r_op, l_alt, r_alt


@dataclass(frozen=True)
class PqrsMatrix:
    """A 2x2 matrix expressed by coefficients over the four-matrix basis.

    The represented matrix is

        cp * L_OP + cq * R_OP + cr * L_ALT + cs * R_ALT

    with the basis built from ``params``.  Instances are immutable; the
    arithmetic helpers return new instances.
    """

    cp: float
    cq: float
    cr: float
    cs: float
    params: WalkParameters

    def _check_same_basis(self, other: "PqrsMatrix") -> None:
        if self.params != other.params:
            raise BasisMismatchError(
                "cannot combine coefficient matrices over different walk parameters"
            )

    def __add__(self, other: "PqrsMatrix") -> "PqrsMatrix":
        self._check_same_basis(other)
        return PqrsMatrix(
            self.cp + other.cp,
            self.cq + other.cq,
            self.cr + other.cr,
            self.cs + other.cs,
            self.params,
        )

    def __sub__(self, other: "PqrsMatrix") -> "PqrsMatrix":
        self._check_same_basis(other)
        return PqrsMatrix(
            self.cp - other.cp,
            self.cq - other.cq,
            self.cr - other.cr,
            self.cs - other.cs,
            self.params,
        )

    def scale(self, factor: float) -> "PqrsMatrix":
        """Multiply every coefficient by a scalar."""
        return PqrsMatrix(
            factor * self.cp,
            factor * self.cq,
            factor * self.cr,
            factor * self.cs,
            self.params,
        )

    def to_matrix(self) -> np.ndarray:
        """Reassemble the plain 2x2 matrix this coefficient vector denotes."""
        return compose(self)


def decompose(matrix: np.ndarray, params: WalkParameters) -> PqrsMatrix:
    """Resolve an arbitrary 2x2 matrix onto the four-matrix basis.

    Raises SingularBasisError when a + d = 1 (within tolerance), because the
    four matrices are then linearly dependent and coefficients are not
    unique.
    """
    if params.is_singular_basis:
        raise SingularBasisError(
            "basis matrices do not span M2 when a + d = 1; decomposition undefined"
        )
    m = np.asarray(matrix, dtype=np.float64)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    a, b, c, d = params.a, params.b, params.c, params.d
    delta = params.delta
    x, y = m[0, 0], m[0, 1]
    z, w = m[1, 0], m[1, 1]
    cp = (d * x - c * y) / delta
    cq = (-b * z + a * w) / delta
    cr = (-b * x + a * y) / delta
    cs = (d * z - c * w) / delta
    return PqrsMatrix(cp, cq, cr, cs, params)


def compose(coeffs: PqrsMatrix) -> np.ndarray:
    """Reassemble the 2x2 matrix denoted by a coefficient vector."""
    l_op, r_op, l_alt, r_alt = basis_matrices(coeffs.params)
    return (
        coeffs.cp * l_op + coeffs.cq * r_op + coeffs.cr * l_alt + coeffs.cs * r_alt
    )


def multiply(left: PqrsMatrix, right: PqrsMatrix) -> PqrsMatrix:
    """Product of two coefficient matrices, computed basis-to-basis.

    Uses the closed multiplication table of the four basis matrices, e.g.
    L_OP @ L_OP = a * L_OP and R_OP @ L_OP = c * R_ALT.  Requires a
    non-singular basis so the coefficient representation is unambiguous.
    """
    left._check_same_basis(right)
    params = left.params
    if params.is_singular_basis:
        raise SingularBasisError(
            "basis matrices do not span M2 when a + d = 1; products over "
            "coefficients are ambiguous"
        )
    a, b, c, d = params.a, params.b, params.c, params.d
    p1, q1, r1, s1 = left.cp, left.cq, left.cr, left.cs
    p2, q2, r2, s2 = right.cp, right.cq, right.cr, right.cs
    # Row factor times column factor, routed by the product table:
    #   L_OP @ {L_OP, R_OP, L_ALT, R_ALT} = a L_OP, b L_ALT, a L_ALT, b L_OP
    #   R_OP @ {...}                      = c R_ALT, d R_OP, c R_OP, d R_ALT
    #   L_ALT @ {...}                     = c L_OP, d L_ALT, c L_ALT, d L_OP
    #   R_ALT @ {...}                     = a R_ALT, b R_OP, a R_OP, b R_ALT
    cp = a * p1 * p2 + b * p1 * s2 + c * r1 * p2 + d * r1 * s2
    cq = d * q1 * q2 + c * q1 * r2 + b * s1 * q2 + a * s1 * r2
    cr = b * p1 * q2 + a * p1 * r2 + d * r1 * q2 + c * r1 * r2
    cs = c * q1 * p2 + d * q1 * s2 + a * s1 * p2 + b * s1 * s2
    return PqrsMatrix(cp, cq, cr, cs, params)


def identity_coefficients(params: WalkParameters) -> PqrsMatrix:
    """Coefficients of the 2x2 identity over the four-matrix basis."""
    if params.is_singular_basis:
        raise SingularBasisError(
            "identity has no coefficient vector when a + d = 1"
        )
    delta = params.delta
    return PqrsMatrix(
        params.d / delta,
        params.a / delta,
        -params.b / delta,
        -params.c / delta,
        params,
    )
