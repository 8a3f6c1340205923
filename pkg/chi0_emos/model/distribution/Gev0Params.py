import math
from dataclasses import dataclass

from chi0_emos.model.error.Distribution import InvalidParameterException

GEV0_SHAPE_UPPER = 0.5


@dataclass(frozen=True)
class Gev0Params:
    """Parameters of the generalized extreme value distribution left-censored at zero.

    Attributes:
      - location (float): Location mu_g (mm).
      - scale (float): Scale s_g > 0 (mm).
      - shape (float): Shape xi in [0, 0.5). Positive xi gives a heavy upper tail.
    """

    location: float
    scale: float
    shape: float = 0.0

    def __post_init__(self):
        for name in ("location", "scale", "shape"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidParameterException(f"{name} must be finite, got {getattr(self, name)}")
        if self.scale <= 0.0:
            raise InvalidParameterException(f"scale must be > 0, got {self.scale}")
        if not (0.0 <= self.shape < GEV0_SHAPE_UPPER):
            raise InvalidParameterException(
                f"shape must lie in [0, {GEV0_SHAPE_UPPER}), got {self.shape}"
            )
