import math
from dataclasses import dataclass


@dataclass(frozen=True)
class TimeSeriesPlot:
    """Daily series of one station drawn as lines over a shared date axis.

    Attributes:
      - title (str): Caption drawn above the plot.
      - dates (tuple[str, ...]): ISO dates of the x axis.
      - series (tuple[tuple[str, tuple[float, ...]], ...]): Named value series, one
        value per date; NaN leaves a gap in the line.
      - y_label (str): Label of the value axis (Default is "mm").
    """

    title: str
    dates: tuple[str, ...]
    series: tuple[tuple[str, tuple[float, ...]], ...]
    y_label: str = "mm"

    def __post_init__(self):
        for name, values in self.series:
            if len(values) != len(self.dates):
                raise ValueError(f"Series {name} has {len(values)} values for {len(self.dates)} dates")

    def value_range(self) -> tuple[float, float]:
        values = [v for _, series in self.series for v in series if not math.isnan(v)]
        if not values:
            return 0.0, 1.0
        low, high = min(min(values), 0.0), max(values)
        return (low, high) if high > low else (low, low + 1.0)
