from dataclasses import dataclass


@dataclass(frozen=True)
class TrainingDiagnostics:
    """Outcome of one training run.

    Attributes:
      - converged (bool): Whether the simplex met a tolerance before its budget.
      - evals (int): Objective evaluations spent.
      - objective (float): Mean CRPS at the fitted coefficients.
      - start_objective (float): Mean CRPS at the starting coefficients.
    """

    converged: bool
    evals: int
    objective: float
    start_objective: float
