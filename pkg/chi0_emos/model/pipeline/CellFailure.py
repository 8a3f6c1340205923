from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class CellFailure:
    """A station/family cell that was aborted.

    Attributes:
      - station (str): Station identifier.
      - family (str): Family value, or "ensemble" for the raw-ensemble diagnostics.
      - error (str): Exception class name.
      - message (str): Exception message.
    """

    station: str
    family: str
    error: str
    message: str

    @classmethod
    def from_exception(cls, station: str, family: str, e: Exception) -> "CellFailure":
        return cls(station=station, family=family, error=e.__class__.__name__, message=str(e))

    def to_record(self) -> dict[str, str]:
        return asdict(self)
