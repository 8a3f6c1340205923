from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class EnsembleResult:
    """Raw-ensemble scores of one station over its verification days.

    Attributes:
      - station (str): Station identifier.
      - dates (numpy.ndarray): Verification days (datetime64[D]).
      - observations (numpy.ndarray): Verifying observations.
      - means (numpy.ndarray): Ensemble means of the verification days.
      - crps (numpy.ndarray): Ensemble CRPS per case.
      - ranks (numpy.ndarray): Verification ranks in 1..m+1.
      - member_count (int): Ensemble size m.
      - frequencies (dict[float, numpy.ndarray]): Member share above each threshold.
    """

    station: str
    dates: np.ndarray
    observations: np.ndarray
    means: np.ndarray
    crps: np.ndarray
    ranks: np.ndarray
    member_count: int
    frequencies: dict[float, np.ndarray] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return int(self.observations.size)
