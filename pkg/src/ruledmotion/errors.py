"""Exception hierarchy.

Every error carries an ``exit_code`` so the command-line front end can map
failures to its stable exit-code contract without a lookup table.
"""


class RuledMotionError(Exception):
    exit_code = 1


class ModeError(RuledMotionError, TypeError):
    """Exact and floating coefficients were mixed, or an exact-only operation
    was requested in float mode."""


class ParseError(RuledMotionError, ValueError):
    """Malformed input document."""


class PreconditionError(RuledMotionError, ValueError):
    pass


class InvalidLineError(RuledMotionError, ValueError):
    exit_code = 2


class NotVectorialError(InvalidLineError):
    pass


class PluckerViolationError(InvalidLineError):
    pass


class DegenerateLineError(InvalidLineError):
    pass


class NotKinematicError(PreconditionError):
    """No rational motion can generate the given parametrization."""

    exit_code = 3


class UnsupportedSplittingError(RuledMotionError):
    """A real-rooted factor does not split over the rationals."""

    exit_code = 3


class GenericityError(RuledMotionError):
    """A coordinate-dependent assumption failed; retry in rotated coordinates."""

    exit_code = 5


class InternalConsistencyError(RuledMotionError, AssertionError):
    pass


class VerificationError(RuledMotionError):
    exit_code = 4

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class NonGenericFactorizationError(RuledMotionError):
    exit_code = 5


class InvalidFactorError(NonGenericFactorizationError):
    pass


class FamilyBoundError(RuledMotionError, ValueError):
    pass


class InterpolationError(RuledMotionError):
    exit_code = 6


class DegenerateInputError(InterpolationError):
    pass


class SingularParameterError(PreconditionError):
    """The motion is singular (zero norm) at the requested parameter."""
