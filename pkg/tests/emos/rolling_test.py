import numpy as np
import pytest

from chi0_emos.engine.emos import prediction_days, rolling_forecast, training_window
from chi0_emos.engine.pipeline import synthetic_station
from chi0_emos.model.data import StationSeries
from chi0_emos.model.distribution import Family
from chi0_emos.model.error.Emos import InsufficientDataException
from chi0_emos.model.optimizer import SimplexConfig

QUICK = SimplexConfig(max_evals=150)


def with_gap(series: StationSeries, after: int, days: int) -> StationSeries:
    dates = series.dates.copy()
    dates[after:] += np.timedelta64(days, "D")
    return StationSeries(series.station, dates, series.observations, series.members)


@pytest.mark.emos
def test_if_one_prediction_follows_a_single_window(rng):
    """Verify that 31 consecutive days give exactly one prediction, on the last day."""
    series = synthetic_station("R", rng, days=31, members=5)
    predictions = rolling_forecast(series, Family.CHI0, config=QUICK)
    assert len(predictions) == 1
    assert predictions[0].date == series.dates[30].astype(object)
    assert predictions[0].observation == series.observations[30]


@pytest.mark.emos
def test_if_prediction_count_matches_series_length(rng):
    """Verify that 761 gap-free days give 731 verification days."""
    series = synthetic_station("R", rng, days=761, members=3)
    days = prediction_days(series)
    assert days.size == 731
    assert days[0] == 30 and days[-1] == 760


@pytest.mark.emos
def test_if_gap_resets_window(rng):
    """Verify that predictions resume only after a full window follows a calendar gap."""
    series = with_gap(synthetic_station("R", rng, days=80, members=3), after=40, days=5)
    days = prediction_days(series)
    np.testing.assert_array_equal(days, np.concatenate([np.arange(30, 40), np.arange(70, 80)]))


@pytest.mark.emos
def test_if_window_precedes_prediction_day(rng):
    """Verify that the training window holds the 30 days before the prediction day."""
    series = synthetic_station("R", rng, days=40, members=3)
    window = training_window(series, 35)
    np.testing.assert_array_equal(window.observations, series.observations[5:35])
    assert window.size == 30


@pytest.mark.emos
def test_if_short_series_is_refused(rng):
    """Verify that fewer than window + 1 days, or no full run, raise InsufficientDataException."""
    with pytest.raises(InsufficientDataException):
        rolling_forecast(synthetic_station("R", rng, days=30, members=3), config=QUICK)
    gapped = with_gap(synthetic_station("R", rng, days=50, members=3), after=25, days=2)
    with pytest.raises(InsufficientDataException):
        rolling_forecast(gapped, config=QUICK)


@pytest.mark.emos
def test_if_warm_start_is_deterministic(rng):
    """Verify that repeated warm-started runs give identical coefficients."""
    series = synthetic_station("R", rng, days=33, members=5)
    first = rolling_forecast(series, Family.CHI0, warm_start=True, config=QUICK)
    second = rolling_forecast(series, Family.CHI0, warm_start=True, config=QUICK)
    assert [p.coefficients for p in first] == [p.coefficients for p in second]
    assert len(first) == 3


@pytest.mark.emos
def test_if_fitted_intercepts_vary_smoothly(rng):
    """Verify that fitted a^2 on overlapping windows has lag-1 correlation above 0.5 over 100 days."""
    series = synthetic_station("R", rng, days=130, members=20)
    predictions = rolling_forecast(series, Family.CHI0)
    assert len(predictions) == 100
    intercepts = np.array([p.coefficients.a**2 for p in predictions])
    assert np.corrcoef(intercepts[:-1], intercepts[1:])[0, 1] > 0.5


@pytest.mark.emos
def test_if_censored_gamma_windows_converge(rng):
    """Verify that rolling CSG0 converges in every window and keeps one shift for the station."""
    series = synthetic_station("R", rng, days=45, members=50)
    predictions = rolling_forecast(series, Family.CSG0)
    assert len(predictions) == 15
    assert all(p.diagnostics.converged for p in predictions)
    assert len({p.coefficients.extra for p in predictions}) == 1
