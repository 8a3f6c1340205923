import math
from dataclasses import dataclass

from chi0_emos.model.error.Distribution import InvalidParameterException


@dataclass(frozen=True)
class Chi0Params:
    """Parameters of the scaled zero degree of freedom non-central chi squared distribution.

    The degrees of freedom are fixed to 0, so the distribution is a Poisson(lam/2)
    mixture of a point mass at 0 and central chi squared laws with 2, 4, ... degrees
    of freedom, scaled by sigma.

    Attributes:
      - lam (float): Non-centrality, dimensionless, >= 0. lam = 0 is the point mass at 0.
      - sigma (float): Scale in the units of the forecast variable (mm), > 0.
    """

    lam: float
    sigma: float

    def __post_init__(self):
        if not (math.isfinite(self.lam) and self.lam >= 0.0):
            raise InvalidParameterException(f"lam must be finite and >= 0, got {self.lam}")
        if not (math.isfinite(self.sigma) and self.sigma > 0.0):
            raise InvalidParameterException(f"sigma must be finite and > 0, got {self.sigma}")

    @property
    def point_mass(self) -> float:
        return math.exp(-self.lam / 2.0)
