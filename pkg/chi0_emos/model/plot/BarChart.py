from dataclasses import dataclass


@dataclass(frozen=True)
class BarChart:
    """Histogram of PIT values or verification ranks.

    Attributes:
      - title (str): Caption drawn above the plot.
      - counts (tuple[int, ...]): Bar heights, left to right.
      - labels (tuple[str, ...]): Tick label per bar.
      - x_label (str): Horizontal axis caption.
      - y_label (str): Vertical axis caption (Default is "count").
    """

    title: str
    counts: tuple[int, ...]
    labels: tuple[str, ...]
    x_label: str
    y_label: str = "count"

    def __post_init__(self):
        if len(self.labels) != len(self.counts):
            raise ValueError(f"{len(self.labels)} labels for {len(self.counts)} bars")
