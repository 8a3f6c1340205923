"""Standalone SVG rendering of histograms, reliability diagrams, score scatters and daily series."""

import logging
from pathlib import Path

import numpy as np
from lxml import etree

from chi0_emos.model.error.Dataset import EmptyInputException
from chi0_emos.model.plot import BarChart, PlotSpec, ReliabilityPlot, ScatterPlot, TimeSeriesPlot

SVG_NS = "http://www.w3.org/2000/svg"
WIDTH = 480
HEIGHT = 360
MARGIN_LEFT = 60
MARGIN_RIGHT = 20
MARGIN_TOP = 40
MARGIN_BOTTOM = 50
PLOT_WIDTH = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
PLOT_HEIGHT = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
SERIES_COLORS = ("black", "steelblue", "firebrick", "darkgreen")


def _fmt(value: float) -> str:
    return f"{value:.2f}"


class _Canvas:
    """Maps data coordinates on [x0, x1] x [y0, y1] into the plot area."""

    def __init__(self, title: str, x_range: tuple[float, float], y_range: tuple[float, float]):
        self.x0, self.x1 = x_range
        self.y0, self.y1 = y_range
        self.root = etree.Element(
            f"{{{SVG_NS}}}svg",
            nsmap={None: SVG_NS},
            width=str(WIDTH),
            height=str(HEIGHT),
            viewBox=f"0 0 {WIDTH} {HEIGHT}",
        )
        self.element("rect", x="0", y="0", width=str(WIDTH), height=str(HEIGHT), fill="white")
        self.text(title, WIDTH / 2, MARGIN_TOP / 2 + 5, cls="title", anchor="middle")

    def px(self, x: float) -> float:
        return MARGIN_LEFT + (x - self.x0) / (self.x1 - self.x0) * PLOT_WIDTH

    def py(self, y: float) -> float:
        return MARGIN_TOP + PLOT_HEIGHT - (y - self.y0) / (self.y1 - self.y0) * PLOT_HEIGHT

    def element(self, tag: str, cls: str | None = None, **attributes) -> etree._Element:
        node = etree.SubElement(self.root, f"{{{SVG_NS}}}{tag}", **attributes)
        if cls is not None:
            node.set("class", cls)
        return node

    def text(self, content: str, x: float, y: float, cls: str = "label", anchor: str = "start", rotate: bool = False):
        node = self.element("text", cls=cls, x=_fmt(x), y=_fmt(y))
        node.set("text-anchor", anchor)
        node.set("font-family", "sans-serif")
        node.set("font-size", "14" if cls == "title" else "11")
        if rotate:
            node.set("transform", f"rotate(-90 {_fmt(x)} {_fmt(y)})")
        node.text = content
        return node

    def line(self, x1: float, y1: float, x2: float, y2: float, cls: str, stroke: str = "black", dashed: bool = False):
        node = self.element(
            "line",
            cls=cls,
            x1=_fmt(self.px(x1)),
            y1=_fmt(self.py(y1)),
            x2=_fmt(self.px(x2)),
            y2=_fmt(self.py(y2)),
            stroke=stroke,
        )
        node.set("stroke-width", "2" if cls in ("segment", "riser") else "1")
        if dashed:
            node.set("stroke-dasharray", "4 3")
        return node

    def axes(self, x_label: str, y_label: str, x_ticks: list[tuple[float, str]], y_ticks: list[tuple[float, str]]):
        self.line(self.x0, self.y0, self.x1, self.y0, cls="axis")
        self.line(self.x0, self.y0, self.x0, self.y1, cls="axis")
        for value, label in x_ticks:
            self.text(label, self.px(value), MARGIN_TOP + PLOT_HEIGHT + 15, cls="tick", anchor="middle")
        for value, label in y_ticks:
            self.text(label, MARGIN_LEFT - 6, self.py(value) + 4, cls="tick", anchor="end")
        self.text(x_label, MARGIN_LEFT + PLOT_WIDTH / 2, HEIGHT - 10, cls="axis-label", anchor="middle")
        self.text(y_label, 15, MARGIN_TOP + PLOT_HEIGHT / 2, cls="axis-label", anchor="middle", rotate=True)

    def tostring(self) -> str:
        return etree.tostring(self.root, pretty_print=True, xml_declaration=True, encoding="UTF-8").decode("utf-8")


def _probability_ticks() -> list[tuple[float, str]]:
    return [(v, f"{v:.1f}") for v in np.linspace(0.0, 1.0, 6)]


def _bar_chart(plot: BarChart) -> str:
    if not plot.counts:
        raise EmptyInputException("Bar chart needs at least one bar")
    bars = len(plot.counts)
    top = max(max(plot.counts), 1)
    canvas = _Canvas(plot.title, (0.0, float(bars)), (0.0, float(top)))
    for k, count in enumerate(plot.counts):
        x = canvas.px(k + 0.05)
        y = canvas.py(count)
        canvas.element(
            "rect",
            cls="bar",
            x=_fmt(x),
            y=_fmt(y),
            width=_fmt(canvas.px(k + 0.95) - x),
            height=_fmt(canvas.py(0.0) - y),
            fill="steelblue",
        ).set("data-count", str(int(count)))
    # thin out labels on wide charts
    step = max(1, bars // 10)
    x_ticks = [(k + 0.5, plot.labels[k]) for k in range(0, bars, step)]
    y_ticks = [(0.0, "0"), (float(top), str(int(top)))]
    canvas.axes(plot.x_label, plot.y_label, x_ticks, y_ticks)
    return canvas.tostring()


def _reliability(plot: ReliabilityPlot) -> str:
    diagram = plot.diagram
    if not diagram.bins:
        raise EmptyInputException("Reliability diagram needs at least one segment")
    canvas = _Canvas(plot.title, (0.0, 1.0), (0.0, 1.0))
    canvas.line(0.0, 0.0, 1.0, 1.0, cls="diagonal", stroke="gray", dashed=True)
    # the recalibration is a step function on [0, 1]: each segment runs to the next one's start
    starts = [0.0] + [b.forecast_range[0] for b in diagram.bins[1:]]
    ends = [b.forecast_range[0] for b in diagram.bins[1:]] + [1.0]
    for k, (segment, start, end) in enumerate(zip(diagram.bins, starts, ends)):
        canvas.line(start, segment.fitted_cep, end, segment.fitted_cep, cls="segment", stroke="firebrick")
        if k > 0:
            canvas.line(start, diagram.bins[k - 1].fitted_cep, start, segment.fitted_cep, cls="riser", stroke="firebrick")
    for probability, outcome in diagram.pairs:
        canvas.element(
            "circle",
            cls="pair",
            cx=_fmt(canvas.px(probability)),
            cy=_fmt(canvas.py(outcome)),
            r="2",
            fill="black",
        ).set("fill-opacity", "0.3")
    canvas.axes("forecast probability", "conditional event probability", _probability_ticks(), _probability_ticks())
    return canvas.tostring()


def _scatter(plot: ScatterPlot) -> str:
    if not plot.x:
        raise EmptyInputException("Scatter plot needs at least one point")
    top = float(max(max(plot.x), max(plot.y)))
    top = top if top > 0.0 else 1.0
    canvas = _Canvas(plot.title, (0.0, top), (0.0, top))
    canvas.line(0.0, 0.0, top, top, cls="diagonal", stroke="gray", dashed=True)
    for x, y in zip(plot.x, plot.y):
        canvas.element("circle", cls="point", cx=_fmt(canvas.px(x)), cy=_fmt(canvas.py(y)), r="2.5", fill="steelblue")
    ticks = [(v, f"{v:.1f}") for v in np.linspace(0.0, top, 5)]
    canvas.axes(plot.x_label, plot.y_label, ticks, ticks)
    return canvas.tostring()


def _runs(values: tuple[float, ...]) -> list[list[int]]:
    """Index runs of consecutive non-NaN values."""
    runs, current = [], []
    for k, value in enumerate(values):
        if np.isnan(value):
            if current:
                runs.append(current)
            current = []
        else:
            current.append(k)
    if current:
        runs.append(current)
    return runs


def _time_series(plot: TimeSeriesPlot) -> str:
    if not plot.dates or not plot.series:
        raise EmptyInputException("Time series plot needs at least one date and one series")
    days = len(plot.dates)
    low, high = plot.value_range()
    canvas = _Canvas(plot.title, (0.0, float(max(days - 1, 1))), (low, high))
    if low < 0.0:
        canvas.line(0.0, 0.0, float(max(days - 1, 1)), 0.0, cls="zero", stroke="gray", dashed=True)
    for k, (name, values) in enumerate(plot.series):
        color = SERIES_COLORS[k % len(SERIES_COLORS)]
        for run in _runs(values):
            points = " ".join(f"{_fmt(canvas.px(i))},{_fmt(canvas.py(values[i]))}" for i in run)
            node = canvas.element("polyline", cls="series", points=points, fill="none", stroke=color)
            node.set("data-series", name)
        legend_y = MARGIN_TOP + 12 + 14 * k
        canvas.element(
            "line",
            cls="legend",
            x1=_fmt(WIDTH - MARGIN_RIGHT - 110),
            y1=_fmt(legend_y - 4),
            x2=_fmt(WIDTH - MARGIN_RIGHT - 94),
            y2=_fmt(legend_y - 4),
            stroke=color,
        )
        canvas.text(name, WIDTH - MARGIN_RIGHT - 90, legend_y, cls="legend")
    step = max(1, days // 4)
    x_ticks = [(float(i), plot.dates[i]) for i in range(0, days, step)]
    y_ticks = [(v, f"{v:.1f}") for v in np.linspace(low, high, 5)]
    canvas.axes("date", plot.y_label, x_ticks, y_ticks)
    return canvas.tostring()


def emit_svg(plot: PlotSpec) -> str:
    """Render a plot description as a standalone SVG document.

    Raises:
        EmptyInputException: If the plot holds no data.
    """
    match plot:
        case BarChart():
            return _bar_chart(plot)
        case ReliabilityPlot():
            return _reliability(plot)
        case ScatterPlot():
            return _scatter(plot)
        case TimeSeriesPlot():
            return _time_series(plot)
    raise TypeError(f"Cannot render {type(plot).__name__}")


def write_svg(plot: PlotSpec, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(emit_svg(plot), encoding="utf-8")
    logging.debug(f"Wrote {path}")
    return path
