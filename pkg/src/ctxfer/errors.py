"""Exception types raised across the package."""


class CtxferError(ValueError):
    """Base class for all domain errors."""


class DegenerateReflectivity(CtxferError):
    pass


class NonOrthogonalInputs(CtxferError):
    pass


class ZeroNorm(CtxferError):
    pass


class DegenerateKernel(CtxferError):
    pass


class NotHermitian(CtxferError):
    pass


class NotPositive(CtxferError):
    pass


class BadTrace(CtxferError):
    pass


class ContextSumViolation(CtxferError):
    pass


class NegativeProbability(CtxferError):
    pass


class ImpossiblePostselection(CtxferError):
    """Raised when a weak value is requested for an outcome that never occurs.

    The weak value is undefined there (not zero). ``report`` optionally carries
    whatever partial result could still be computed.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class CouplingTooLarge(CtxferError):
    pass
