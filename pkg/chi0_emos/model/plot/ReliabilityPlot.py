from dataclasses import dataclass

from chi0_emos.model.scoring import ReliabilityDiagramData


@dataclass(frozen=True)
class ReliabilityPlot:
    """CORP reliability diagram of one event.

    Attributes:
      - title (str): Caption drawn above the plot.
      - diagram (ReliabilityDiagramData): Isotonic segments and raw pairs.
    """

    title: str
    diagram: ReliabilityDiagramData
