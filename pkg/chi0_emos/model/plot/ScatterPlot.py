from dataclasses import dataclass


@dataclass(frozen=True)
class ScatterPlot:
    """Paired scores of two methods with the bisecting line.

    Attributes:
      - title (str): Caption drawn above the plot.
      - x (tuple[float, ...]): Scores of the first method.
      - y (tuple[float, ...]): Scores of the second method.
      - x_label (str): Name of the first method.
      - y_label (str): Name of the second method.
    """

    title: str
    x: tuple[float, ...]
    y: tuple[float, ...]
    x_label: str
    y_label: str

    def __post_init__(self):
        if len(self.x) != len(self.y):
            raise ValueError(f"{len(self.x)} x values for {len(self.y)} y values")
