import math
from dataclasses import dataclass

import numpy as np

from chi0_emos.model.error.Dataset import EmptyInputException

CONSISTENCY_TOLERANCE = 1e-12


@dataclass(frozen=True)
class EnsembleForecast:
    """One forecast case: m exchangeable member values and their summary statistics.

    Attributes:
      - members (tuple[float, ...]): Member forecasts (mm, >= 0).
      - mean (float): Ensemble mean.
      - sd (float): Ensemble standard deviation with divisor m - 1 (0 for m = 1).
      - all_zero (bool): True iff every member is 0.
    """

    members: tuple[float, ...]
    mean: float
    sd: float
    all_zero: bool

    def __post_init__(self):
        if len(self.members) == 0:
            raise EmptyInputException("An ensemble forecast needs at least one member")
        values = np.asarray(self.members, dtype=float)
        if np.any(~np.isfinite(values)) or np.any(values < 0.0):
            raise ValueError("Ensemble members must be finite and >= 0")
        mean, sd = ensemble_statistics(values)
        if abs(mean - self.mean) > CONSISTENCY_TOLERANCE or abs(sd - self.sd) > CONSISTENCY_TOLERANCE:
            raise ValueError("Stored mean/sd do not match the members")
        if self.all_zero != bool(np.all(values == 0.0)):
            raise ValueError("all_zero flag does not match the members")

    @classmethod
    def from_members(cls, members) -> "EnsembleForecast":
        values = np.asarray(members, dtype=float).ravel()
        mean, sd = ensemble_statistics(values) if values.size else (math.nan, math.nan)
        return cls(
            members=tuple(values.tolist()),
            mean=mean,
            sd=sd,
            all_zero=bool(values.size and np.all(values == 0.0)),
        )

    @property
    def size(self) -> int:
        return len(self.members)


def ensemble_statistics(values: np.ndarray) -> tuple[float, float]:
    values = np.asarray(values, dtype=float)
    mean = float(np.mean(values))
    sd = float(np.std(values, ddof=1)) if values.size > 1 else 0.0
    return mean, sd
