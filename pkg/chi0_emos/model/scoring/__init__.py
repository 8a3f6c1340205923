from .BrierDecomposition import BrierDecomposition
from .ReliabilityDiagramData import ReliabilityBin, ReliabilityDiagramData
from .ScoreReport import ScoreReport

__all__ = ["BrierDecomposition", "ReliabilityBin", "ReliabilityDiagramData", "ScoreReport"]
