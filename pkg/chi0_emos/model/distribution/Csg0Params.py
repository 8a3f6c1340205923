import math
from dataclasses import dataclass

from chi0_emos.model.error.Distribution import InvalidParameterException


@dataclass(frozen=True)
class Csg0Params:
    """Parameters of the censored, shifted gamma distribution.

    A gamma variable with the given shape and scale is shifted left by `shift` and
    censored at zero, so the mass the shift moves below zero sits on the atom at 0.

    Attributes:
      - shape (float): Gamma shape k > 0.
      - scale (float): Gamma scale theta > 0 (mm).
      - shift (float): Left shift delta >= 0 (mm).
    """

    shape: float
    scale: float
    shift: float = 0.0

    def __post_init__(self):
        for name in ("shape", "scale", "shift"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidParameterException(f"{name} must be finite, got {getattr(self, name)}")
        if self.shape <= 0.0:
            raise InvalidParameterException(f"shape must be > 0, got {self.shape}")
        if self.scale <= 0.0:
            raise InvalidParameterException(f"scale must be > 0, got {self.scale}")
        if self.shift < 0.0:
            raise InvalidParameterException(f"shift must be >= 0, got {self.shift}")
