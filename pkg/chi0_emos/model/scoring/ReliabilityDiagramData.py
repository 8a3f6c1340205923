from dataclasses import dataclass


@dataclass(frozen=True)
class ReliabilityBin:
    """One constant segment of the isotonic recalibration.

    Attributes:
      - forecast_range (tuple[float, float]): Smallest and largest forecast in the segment.
      - fitted_cep (float): Conditional event probability of the segment.
      - case_count (int): Number of forecasts in the segment.
    """

    forecast_range: tuple[float, float]
    fitted_cep: float
    case_count: int


@dataclass(frozen=True)
class ReliabilityDiagramData:
    """Data of a CORP reliability diagram.

    Attributes:
      - bins (tuple[ReliabilityBin, ...]): Segments in increasing forecast order.
      - pairs (tuple[tuple[float, int], ...]): Raw (forecast probability, outcome) pairs.
    """

    bins: tuple[ReliabilityBin, ...]
    pairs: tuple[tuple[float, int], ...]
