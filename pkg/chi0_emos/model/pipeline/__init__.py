from .CellFailure import CellFailure
from .CellResult import CellResult
from .EnsembleResult import EnsembleResult
from .PipelineReport import PipelineReport

__all__ = ["CellFailure", "CellResult", "EnsembleResult", "PipelineReport"]
