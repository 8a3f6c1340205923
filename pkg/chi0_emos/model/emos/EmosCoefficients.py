import math
from dataclasses import dataclass

import numpy as np

from chi0_emos.model.distribution import GEV0_SHAPE_UPPER, Family
from chi0_emos.model.error.Distribution import InvalidParameterException

DEFAULT_EXTRA = {Family.CHI0: None, Family.CSG0: 0.1, Family.GEV0: 0.1}


@dataclass(frozen=True)
class EmosCoefficients:
    """Trainable link coefficients, squared on use: first parameter a^2 + b^2 * mean,
    second parameter c^2 + d^2 * sd.

    Attributes:
      - a (float): Intercept of the first link.
      - b (float): Ensemble-mean slope of the first link.
      - c (float): Intercept of the second link.
      - d (float): Ensemble-sd slope of the second link.
      - family (Family): Family the coefficients belong to.
      - extra (float | None): Fitted family constant, the CSG0 shift or the GEV0
        shape; None for Chi0.
    """

    a: float
    b: float
    c: float
    d: float
    family: Family = Family.CHI0
    extra: float | None = None

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidParameterException(f"Coefficient {name} must be finite")
        if self.family == Family.CHI0:
            if self.extra is not None:
                raise InvalidParameterException("Chi0 coefficients carry no extra constant")
            return
        if self.extra is None or not math.isfinite(self.extra):
            raise InvalidParameterException(f"{self.family.value} coefficients need a finite extra constant")
        if self.family == Family.CSG0 and self.extra < 0.0:
            raise InvalidParameterException(f"CSG0 shift must be >= 0, got {self.extra}")
        if self.family == Family.GEV0 and not (0.0 <= self.extra < GEV0_SHAPE_UPPER):
            raise InvalidParameterException(
                f"GEV0 shape must lie in [0, {GEV0_SHAPE_UPPER}), got {self.extra}"
            )

    @classmethod
    def default_start(cls, family: Family = Family.CHI0) -> "EmosCoefficients":
        """a = 0.5 and b = c = d = 1, plus the family's starting extra constant."""
        return cls(0.5, 1.0, 1.0, 1.0, family, DEFAULT_EXTRA[family])

    @classmethod
    def from_vector(cls, vector, family: Family) -> "EmosCoefficients":
        values = [float(v) for v in np.asarray(vector, dtype=float).ravel()]
        extra = values[4] if family != Family.CHI0 else None
        return cls(values[0], values[1], values[2], values[3], family, extra)

    def to_vector(self) -> np.ndarray:
        values = [self.a, self.b, self.c, self.d]
        if self.extra is not None:
            values.append(self.extra)
        return np.array(values, dtype=float)
