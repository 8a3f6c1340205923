class NumericsException(Exception):
    """Base class for exceptions in the numerics module."""
    pass


class QuadratureConvergenceException(NumericsException):
    """Adaptive quadrature ran out of subdivisions before meeting its tolerance.

    Attributes:
      - value (float | numpy.ndarray): Best estimate(s) reached.
      - error_estimate (float | numpy.ndarray): Error bound(s) of the best estimate(s).
    """

    def __init__(self, message: str, value, error_estimate):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate


class InvalidBracketException(NumericsException, ValueError):
    """The root bracket does not change sign."""
    pass


class RootConvergenceException(NumericsException):
    """Root finding did not reach the requested tolerance."""
    pass
