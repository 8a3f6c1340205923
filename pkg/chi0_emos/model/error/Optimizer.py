class OptimizerException(Exception):
    """Base class for exceptions in the optimizer module."""
    pass

class InvalidStartException(OptimizerException, ValueError):
    """Exception raised when the objective is not finite at the starting point."""
    pass
