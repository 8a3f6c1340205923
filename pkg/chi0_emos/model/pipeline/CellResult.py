from dataclasses import dataclass, field

import numpy as np

from chi0_emos.model.distribution import Family
from chi0_emos.model.emos.RollingPrediction import RollingPrediction


@dataclass(frozen=True)
class CellResult:
    """Rolling forecasts of one station and family, with their scores.

    Attributes:
      - station (str): Station identifier.
      - family (Family): Predictive family.
      - predictions (list[RollingPrediction]): One entry per verification day.
      - crps (numpy.ndarray | None): Per-case CRPS, None when scores were not requested.
      - pit (numpy.ndarray | None): Per-case randomized PIT values.
      - probabilities (dict[float, numpy.ndarray]): Event probabilities per threshold.
    """

    station: str
    family: Family
    predictions: list[RollingPrediction]
    crps: np.ndarray | None = None
    pit: np.ndarray | None = None
    probabilities: dict[float, np.ndarray] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.predictions)

    @property
    def observations(self) -> np.ndarray:
        return np.array([p.observation for p in self.predictions], dtype=float)
