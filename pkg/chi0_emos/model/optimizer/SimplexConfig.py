from dataclasses import dataclass

from chi0_emos.model.error.Optimizer import OptimizerException


@dataclass(frozen=True)
class SimplexConfig:
    """Nelder-Mead coefficients and stopping rules.

    Attributes:
      - reflection (float): Reflection coefficient (Default is 1).
      - expansion (float): Expansion coefficient (Default is 2).
      - contraction (float): Contraction coefficient (Default is 0.5).
      - shrink (float): Shrink coefficient (Default is 0.5).
      - max_evals (int): Objective evaluation budget (Default is 5000).
      - x_tol (float): Simplex diameter at which the search stops (Default is 1e-6).
      - f_tol (float): Spread of vertex values at which the search stops (Default is 1e-8).
      - initial_step_fractions (tuple[float, ...] | None): Per-coordinate edge lengths of
        the initial simplex as fractions of |x_i|. None means 0.25 for every coordinate.
      - min_step (float): Floor on every initial edge length (Default is 0.1).
    """

    reflection: float = 1.0
    expansion: float = 2.0
    contraction: float = 0.5
    shrink: float = 0.5
    max_evals: int = 5000
    x_tol: float = 1e-6
    f_tol: float = 1e-8
    initial_step_fractions: tuple[float, ...] | None = None
    min_step: float = 0.1

    def __post_init__(self):
        if not (0.0 < self.contraction < 1.0 < self.expansion):
            raise OptimizerException(
                "Simplex coefficients must satisfy 0 < contraction < 1 < expansion"
            )
        if self.reflection <= 0.0 or not (0.0 < self.shrink < 1.0):
            raise OptimizerException("reflection must be > 0 and shrink in (0, 1)")
        if self.x_tol <= 0.0 or self.f_tol <= 0.0:
            raise OptimizerException("x_tol and f_tol must be > 0")

    def validate_dimension(self, dim: int):
        if dim < 1:
            raise OptimizerException(f"Objective dimension must be >= 1, got {dim}")
        if self.max_evals < dim + 1:
            raise OptimizerException(
                f"max_evals ({self.max_evals}) must be at least dim + 1 ({dim + 1})"
            )
        if self.initial_step_fractions is not None and len(self.initial_step_fractions) != dim:
            raise OptimizerException(
                f"initial_step_fractions has {len(self.initial_step_fractions)} entries, expected {dim}"
            )
