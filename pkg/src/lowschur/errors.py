class LowSchurError(Exception):
    """Base class for solver errors."""


class ReflectionIndexError(LowSchurError, ValueError):
    pass


class SingularToeplitzError(LowSchurError, ZeroDivisionError):
    pass


class DimensionError(LowSchurError, ValueError):
    pass


class PoleAtOriginError(LowSchurError, ZeroDivisionError):
    pass


class InadmissibleDataError(LowSchurError, ValueError):
    """Raised when the Schur recursion hits a parameter on or outside the unit circle.

    ``stage`` is the recursion index j at which |c_0^(j)| >= 1 - strict_tol.
    """

    def __init__(self, message, stage=None, value=None, partial=()):
        super().__init__(message)
        self.stage = stage
        self.value = value
        self.partial = list(partial)


class NumericalInstabilityError(LowSchurError, ArithmeticError):
    pass


class StripError(LowSchurError, ValueError):
    """f(0) does not match the Schur parameter being stripped."""


class ExtractionError(LowSchurError, ValueError):
    def __init__(self, message, stage=None):
        super().__init__(message)
        self.stage = stage


class RejectedParameterError(LowSchurError, ValueError):
    pass


class InconsistentThetaError(LowSchurError, ArithmeticError):
    pass
