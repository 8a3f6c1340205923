from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class SimplexResult:
    """Outcome of a Nelder-Mead minimisation.

    Attributes:
      - argmin (numpy.ndarray): Best vertex found.
      - value (float): Objective value at `argmin`.
      - evals (int): Number of objective evaluations spent.
      - converged (bool): True when a tolerance (x or f) stopped the search.
      - start_value (float): Objective value at the starting point.
      - trace (tuple[float, ...]): Best value after each iteration.
    """

    argmin: np.ndarray
    value: float
    evals: int
    converged: bool
    start_value: float = float("nan")
    trace: tuple[float, ...] = field(default_factory=tuple)
