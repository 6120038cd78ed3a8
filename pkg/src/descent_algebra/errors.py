"""Exception hierarchy shared by every layer of the package."""


class DescentAlgebraError(Exception):
    """Base class for all domain errors raised by this package."""


class RankCapExceeded(DescentAlgebraError):
    """A request would enumerate a symmetric group beyond the configured cap."""


class RankMismatch(DescentAlgebraError):
    """Two values of different ambient rank were combined."""


class InvalidSubset(DescentAlgebraError):
    """A simple-root subset violates a containment or rank precondition."""


class ContextMismatch(DescentAlgebraError):
    """A vector was used with a transfer context it does not belong to."""


class CoefficientOverflow(DescentAlgebraError, OverflowError):
    """An integer coefficient left the signed 64-bit range."""


class DecompositionError(DescentAlgebraError):
    """An element does not lie in the span of the coset-sum basis."""


class ClosedFormViolation(DescentAlgebraError):
    """An asserted closed form disagreed with the honestly computed value."""
