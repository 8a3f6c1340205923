class EmosException(Exception):
    """Base class for exceptions in the EMOS module."""
    pass


class MomentMatchingException(EmosException, ValueError):
    """Exception raised when a linked mean is not positive and cannot be moment-matched."""
    pass


class InsufficientDataException(EmosException, ValueError):
    """Exception raised when a station series is too short for a rolling training window."""
    pass
