class DistributionException(Exception):
    """Base class for exceptions in the distributions module."""
    pass

class InvalidParameterException(DistributionException, ValueError):
    """Exception raised for a parameter record violating its family constraints."""
    pass

class DomainException(DistributionException, ValueError):
    """Exception raised for a point or probability outside the supported domain."""
    pass
