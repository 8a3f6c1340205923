class EnvironmentVariableNotFoundException(EnvironmentError):
    """Raised when a required environment variable is not set."""

    pass


class InvalidEnvironmentVariableFormatException(EnvironmentError):
    """Raised when an environment variable cannot be converted to its declared type."""

    pass
