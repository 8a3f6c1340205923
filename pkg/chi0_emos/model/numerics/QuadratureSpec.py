import math
from dataclasses import dataclass


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances of the adaptive quadrature engine.

    Attributes:
      - abs_tol (float): Absolute error target (Default is 1e-9).
      - rel_tol (float): Relative error target (Default is 1e-8).
      - max_subdivisions (int): Interval splits allowed per integral (Default is 200).
      - tail_cutoff_probability (float): Survival probability at which semi-infinite
        CRPS tails are truncated (Default is 1e-9).
    """

    abs_tol: float = 1e-9
    rel_tol: float = 1e-8
    max_subdivisions: int = 200
    tail_cutoff_probability: float = 1e-9

    def __post_init__(self):
        for name in ("abs_tol", "rel_tol"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0.0):
                raise ValueError(f"{name} must be finite and > 0, got {value}")
        if self.max_subdivisions < 1:
            raise ValueError(f"max_subdivisions must be >= 1, got {self.max_subdivisions}")
        if not (0.0 < self.tail_cutoff_probability < 1.0):
            raise ValueError(
                f"tail_cutoff_probability must lie in (0, 1), got {self.tail_cutoff_probability}"
            )

    def tolerance(self, value):
        """Error target for an integral whose current estimate is `value`."""
        return max(self.abs_tol, self.rel_tol * abs(value))
