class DatasetException(Exception):
    """Base class for exceptions raised on input data."""
    pass


class DatasetFormatException(DatasetException, ValueError):
    """Exception raised for a malformed forecast file.

    Attributes:
      - row (int | None): 1-based line number in the source file, when known.
    """

    def __init__(self, message: str, row: int | None = None):
        super().__init__(message if row is None else f"row {row}: {message}")
        self.row = row


class EmptyInputException(DatasetException, ValueError):
    """Exception raised when a score or diagnostic is requested on empty input."""
    pass
