"""Exception types shared across the package."""


class CorrwalkError(Exception):
    """Base class for all corrwalk errors."""


class SingularBasisError(CorrwalkError):
    """The step-matrix system is degenerate (a + d = 1) and cannot span M2."""


class BasisMismatchError(CorrwalkError):
    """Two coefficient matrices built over different walk parameters were combined."""


class BudgetExceededError(CorrwalkError):
    """An enumeration or dynamic-programming budget was exceeded."""


class NonConvergenceError(CorrwalkError):
    """An iterative limit did not stabilize within its resource cap."""


class ApplicabilityError(CorrwalkError):
    """A closed form was requested outside the parameter class where it holds."""
