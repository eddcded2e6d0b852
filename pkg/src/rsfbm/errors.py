"""Exception types shared across the package."""


class RsfbmError(Exception):
    """Base class for all package errors."""


class DomainError(RsfbmError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class EvaluationError(RsfbmError, ArithmeticError):
    """A numerical evaluation failed to converge.

    Carries the best available partial estimate in ``partial``.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class ConsistencyError(RsfbmError, ArithmeticError):
    """Two internal routes for the same quantity disagree beyond tolerance."""


class NumericalFailure(RsfbmError, ArithmeticError):
    """A linear-algebra or quadrature step failed beyond repair policies."""


class NotSampleableError(RsfbmError, ValueError):
    """The diffusion-coefficient law has no exact sampler."""


class UnsupportedError(RsfbmError, ValueError):
    """The operation is not available for this model variant."""


class AdmissibilityError(RsfbmError, ValueError):
    """A functional violates the growth bounds required by the calculus."""


class MomentError(RsfbmError, ValueError):
    """A required moment of the diffusion coefficient is infinite."""


class SpectralResolutionError(RsfbmError, ValueError):
    """The spectral grid is too coarse for the requested initial datum."""
