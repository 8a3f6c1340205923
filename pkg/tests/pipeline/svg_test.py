import pytest
from lxml import etree

from chi0_emos.engine.plots import emit_svg, write_svg
from chi0_emos.engine.verification import reliability_diagram
from chi0_emos.model.error.Dataset import EmptyInputException
from chi0_emos.model.plot import BarChart, ReliabilityPlot, ScatterPlot, TimeSeriesPlot
from chi0_emos.model.scoring import ReliabilityDiagramData

SVG = "{http://www.w3.org/2000/svg}"


def parse(document: str):
    return etree.fromstring(document.encode("utf-8"))


def by_class(root, cls: str):
    return [node for node in root.iter() if node.get("class") == cls]


@pytest.mark.svg
def test_if_equal_bars_have_equal_heights():
    """Verify that two bars of one count are drawn with the same height and carry their counts."""
    root = parse(emit_svg(BarChart(title="PIT", counts=(1, 1), labels=("0.50", "1.00"), x_label="PIT")))
    assert root.tag == f"{SVG}svg"
    bars = by_class(root, "bar")
    assert len(bars) == 2
    assert bars[0].get("height") == bars[1].get("height")
    assert [b.get("data-count") for b in bars] == ["1", "1"]


@pytest.mark.svg
def test_if_single_segment_is_horizontal():
    """Verify that a single reliability segment is one horizontal line across [0, 1] with the diagonal."""
    root = parse(emit_svg(ReliabilityPlot(title="events", diagram=reliability_diagram([0.3, 0.7], [1, 0]))))
    segments = by_class(root, "segment")
    assert len(segments) == 1
    assert segments[0].get("y1") == segments[0].get("y2")
    assert len(by_class(root, "diagonal")) == 1
    assert len(by_class(root, "pair")) == 2
    assert not by_class(root, "riser")


@pytest.mark.svg
def test_if_steps_are_joined_by_risers():
    """Verify that k segments are joined by k - 1 vertical risers."""
    diagram = reliability_diagram([0.1, 0.3, 0.7, 0.9], [0, 1, 0, 1])
    root = parse(emit_svg(ReliabilityPlot(title="events", diagram=diagram)))
    assert len(by_class(root, "segment")) == 3
    risers = by_class(root, "riser")
    assert len(risers) == 2
    assert all(r.get("x1") == r.get("x2") for r in risers)


@pytest.mark.svg
def test_if_scatter_draws_every_point():
    """Verify that a scatter plot draws one point per pair plus the diagonal."""
    root = parse(emit_svg(ScatterPlot(title="CRPS", x=(0.1, 0.5, 2.0), y=(0.2, 0.4, 1.5), x_label="a", y_label="b")))
    assert len(by_class(root, "point")) == 3
    assert len(by_class(root, "diagonal")) == 1


@pytest.mark.svg
def test_if_daily_series_break_at_missing_values():
    """Verify that each series becomes a line, split where a value is missing, with a zero line below 0."""
    nan = float("nan")
    plot = TimeSeriesPlot(
        title="Daily series",
        dates=("2024-01-01", "2024-01-02", "2024-01-03", "2024-01-04"),
        series=(("obs", (0.0, 2.0, 1.0, 3.0)), ("obs_minus_mean", (-1.0, 0.5, 0.0, 1.0)), ("crps_chi0", (0.3, nan, 0.4, 0.2))),
    )
    root = parse(emit_svg(plot))
    lines = by_class(root, "series")
    assert [line.get("data-series") for line in lines] == ["obs", "obs_minus_mean", "crps_chi0", "crps_chi0"]
    assert len(lines[0].get("points").split()) == 4
    assert len(by_class(root, "zero")) == 1
    with pytest.raises(ValueError):
        TimeSeriesPlot(title="bad", dates=("2024-01-01",), series=(("obs", (1.0, 2.0)),))


@pytest.mark.svg
def test_if_empty_plots_are_refused():
    """Verify that plots without data raise EmptyInputException."""
    with pytest.raises(EmptyInputException):
        emit_svg(BarChart(title="empty", counts=(), labels=(), x_label="rank"))
    with pytest.raises(EmptyInputException):
        emit_svg(ReliabilityPlot(title="empty", diagram=ReliabilityDiagramData(bins=(), pairs=())))
    with pytest.raises(EmptyInputException):
        emit_svg(ScatterPlot(title="empty", x=(), y=(), x_label="a", y_label="b"))
    with pytest.raises(EmptyInputException):
        emit_svg(TimeSeriesPlot(title="empty", dates=(), series=()))


@pytest.mark.svg
def test_if_written_file_is_standalone(tmp_path):
    """Verify that a written plot is a parseable SVG document in a created directory."""
    path = write_svg(BarChart(title="rank", counts=(3, 0, 2), labels=("1", "2", "3"), x_label="rank"), tmp_path / "plots" / "rank.svg")
    root = etree.parse(str(path)).getroot()
    assert root.get("viewBox") == "0 0 480 360"
