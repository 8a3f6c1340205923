from dataclasses import dataclass, field

import numpy as np

from chi0_emos.model.emos.EnsembleForecast import EnsembleForecast
from chi0_emos.model.error.Dataset import EmptyInputException


@dataclass(frozen=True)
class TrainingWindow:
    """Forecast cases and observations a set of coefficients is trained on.

    Attributes:
      - members (numpy.ndarray): (n, m) member forecasts.
      - observations (numpy.ndarray): n observations, >= 0.
      - means (numpy.ndarray): Ensemble means, derived.
      - sds (numpy.ndarray): Ensemble standard deviations (divisor m - 1), derived.
      - all_zero (numpy.ndarray): Rows whose members are all 0, derived.
    """

    members: np.ndarray
    observations: np.ndarray
    means: np.ndarray = field(init=False)
    sds: np.ndarray = field(init=False)
    all_zero: np.ndarray = field(init=False)

    def __post_init__(self):
        members = np.atleast_2d(np.asarray(self.members, dtype=float))
        observations = np.asarray(self.observations, dtype=float).ravel()
        if observations.size == 0:
            raise EmptyInputException("A training window needs at least one case")
        if members.shape[0] != observations.size:
            raise ValueError(f"{members.shape[0]} forecasts for {observations.size} observations")
        if np.any(~np.isfinite(observations)) or np.any(observations < 0.0):
            raise ValueError("Training observations must be finite and >= 0")
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "observations", observations)
        object.__setattr__(self, "means", members.mean(axis=1))
        sds = members.std(axis=1, ddof=1) if members.shape[1] > 1 else np.zeros(observations.size)
        object.__setattr__(self, "sds", sds)
        object.__setattr__(self, "all_zero", np.all(members == 0.0, axis=1))

    @classmethod
    def from_cases(cls, cases: list[tuple[EnsembleForecast, float]]) -> "TrainingWindow":
        if not cases:
            raise EmptyInputException("A training window needs at least one case")
        return cls(
            members=np.array([f.members for f, _ in cases], dtype=float),
            observations=np.array([y for _, y in cases], dtype=float),
        )

    @property
    def size(self) -> int:
        return int(self.observations.size)
