from dataclasses import dataclass

import numpy as np

from chi0_emos.model.error.Dataset import DatasetFormatException, EmptyInputException


@dataclass(frozen=True)
class StationSeries:
    """Daily observations of one station paired with their ensemble forecasts.

    Attributes:
      - station (str): Station identifier.
      - dates (numpy.ndarray): Strictly increasing dates (datetime64[D]).
      - observations (numpy.ndarray): Observed amounts (mm), one per date.
      - members (numpy.ndarray): (n, m) member forecasts (mm).
    """

    station: str
    dates: np.ndarray
    observations: np.ndarray
    members: np.ndarray

    def __post_init__(self):
        dates = np.asarray(self.dates, dtype="datetime64[D]").ravel()
        observations = np.asarray(self.observations, dtype=float).ravel()
        members = np.atleast_2d(np.asarray(self.members, dtype=float))
        if dates.size == 0:
            raise EmptyInputException(f"Station {self.station} has no rows")
        if not (dates.size == observations.size == members.shape[0]):
            raise DatasetFormatException(f"Station {self.station}: dates, observations and members differ in length")
        if np.any(np.diff(dates) <= np.timedelta64(0, "D")):
            raise DatasetFormatException(f"Station {self.station}: dates are not strictly increasing")
        for name, values in (("observations", observations), ("members", members)):
            if np.any(~np.isfinite(values)) or np.any(values < 0.0):
                raise DatasetFormatException(f"Station {self.station}: {name} must be finite and >= 0")
        object.__setattr__(self, "dates", dates)
        object.__setattr__(self, "observations", observations)
        object.__setattr__(self, "members", members)

    @property
    def size(self) -> int:
        return int(self.observations.size)

    @property
    def member_count(self) -> int:
        return int(self.members.shape[1])

    def consecutive_run(self) -> np.ndarray:
        """Number of consecutive calendar days ending at each row, the row included."""
        run = np.ones(self.size, dtype=int)
        steps = np.diff(self.dates) == np.timedelta64(1, "D")
        for i in np.flatnonzero(steps) + 1:
            run[i] = run[i - 1] + 1
        return run
