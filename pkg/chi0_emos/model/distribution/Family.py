from enum import Enum


class Family(str, Enum):
    """Predictive distribution families compared by the postprocessing runs."""

    CHI0 = "chi0"
    CSG0 = "csg0"
    GEV0 = "gev0"

    @classmethod
    def parse(cls, name: str) -> "Family":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ValueError(
                f"Unknown family '{name}', expected one of {[f.value for f in cls]}"
            ) from None
