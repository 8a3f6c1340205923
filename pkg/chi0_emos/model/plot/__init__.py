from .BarChart import BarChart
from .ReliabilityPlot import ReliabilityPlot
from .ScatterPlot import ScatterPlot
from .TimeSeriesPlot import TimeSeriesPlot

PlotSpec = BarChart | ReliabilityPlot | ScatterPlot | TimeSeriesPlot

__all__ = ["BarChart", "PlotSpec", "ReliabilityPlot", "ScatterPlot", "TimeSeriesPlot"]
