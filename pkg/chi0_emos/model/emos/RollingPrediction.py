from dataclasses import dataclass
from datetime import date

from chi0_emos.engine.distributions import PredictiveDistribution
from chi0_emos.model.emos.EmosCoefficients import EmosCoefficients
from chi0_emos.model.emos.TrainingDiagnostics import TrainingDiagnostics


@dataclass(frozen=True)
class RollingPrediction:
    """A verification day of a rolling run.

    Attributes:
      - date (datetime.date): Verification day.
      - distribution (PredictiveDistribution): Predictive law for the day.
      - observation (float): Verifying observation.
      - members (tuple[float, ...]): Raw ensemble of the day.
      - coefficients (EmosCoefficients): Coefficients trained on the preceding window.
      - diagnostics (TrainingDiagnostics): Training outcome of that window.
    """

    date: date
    distribution: PredictiveDistribution
    observation: float
    members: tuple[float, ...]
    coefficients: EmosCoefficients
    diagnostics: TrainingDiagnostics
