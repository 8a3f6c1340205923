from dataclasses import dataclass


@dataclass(frozen=True)
class PitValue:
    """Probability integral transform of one observation.

    Attributes:
      - value (float): PIT value in [0, 1].
      - randomized (bool): True iff the observation was 0 and the value was drawn
        uniformly from (0, CDF(0)].
    """

    value: float
    randomized: bool

    def __post_init__(self):
        if not (0.0 <= self.value <= 1.0):
            raise ValueError(f"PIT value must lie in [0, 1], got {self.value}")
