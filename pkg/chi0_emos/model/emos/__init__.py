from .EmosCoefficients import EmosCoefficients
from .EnsembleForecast import EnsembleForecast, ensemble_statistics
from .TrainingDiagnostics import TrainingDiagnostics
from .TrainingWindow import TrainingWindow

__all__ = [
    "EmosCoefficients",
    "EnsembleForecast",
    "TrainingDiagnostics",
    "TrainingWindow",
    "ensemble_statistics",
]
