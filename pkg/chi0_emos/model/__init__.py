from .data import ForecastDataset, RunConfig, StationSeries
from .distribution import Chi0Params, Csg0Params, Family, Gev0Params
from .emos import EmosCoefficients, EnsembleForecast, TrainingDiagnostics, TrainingWindow
from .numerics import QuadratureSpec
from .optimizer import SimplexConfig, SimplexResult
from .scoring import BrierDecomposition, ReliabilityDiagramData, ScoreReport
from .verification import PitValue, RankHistogram

__all__ = [
    "BrierDecomposition",
    "Chi0Params",
    "Csg0Params",
    "EmosCoefficients",
    "EnsembleForecast",
    "Family",
    "ForecastDataset",
    "Gev0Params",
    "PitValue",
    "QuadratureSpec",
    "RankHistogram",
    "ReliabilityDiagramData",
    "RunConfig",
    "ScoreReport",
    "SimplexConfig",
    "SimplexResult",
    "StationSeries",
    "TrainingDiagnostics",
    "TrainingWindow",
]
