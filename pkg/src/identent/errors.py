"""Exception hierarchy.

Two families matter to callers: :class:`InvariantViolation` for inputs that
are not valid states or matrices, and :class:`NumericalFailure` for kernels
that could not deliver their contract.
"""


class IdentEntError(Exception):
    """Base class for all library errors."""


class InvariantViolation(IdentEntError, ValueError):
    pass


class NumericalFailure(IdentEntError, ArithmeticError):
    pass


class NotHermitian(InvariantViolation):
    pass


class NotSymmetric(InvariantViolation):
    pass


class NotAntisymmetric(InvariantViolation):
    pass


class WrongSymmetry(InvariantViolation):
    pass


class NotNormalized(InvariantViolation):
    pass


class DimensionTooSmall(InvariantViolation):
    pass


class DimensionTooLarge(InvariantViolation):
    pass


class DimensionMismatch(InvariantViolation):
    pass


class LinearlyDependent(InvariantViolation):
    pass


class NoConvergence(NumericalFailure):
    pass


class NumericalInconsistency(NumericalFailure):
    """Two criteria that must agree did not, and the disagreement is not
    explained by a state lying near a decision threshold."""
