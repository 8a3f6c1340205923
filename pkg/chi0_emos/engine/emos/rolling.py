import logging
from dataclasses import replace

import numpy as np

from chi0_emos.engine.emos.climatology import climatological_shift
from chi0_emos.engine.emos.link import link
from chi0_emos.engine.emos.trainer import train_window
from chi0_emos.engine.numerics import DEFAULT_SPEC
from chi0_emos.engine.optimizer import DEFAULT_CONFIG
from chi0_emos.model.data import StationSeries
from chi0_emos.model.distribution import Family
from chi0_emos.model.emos import EmosCoefficients, EnsembleForecast, TrainingWindow
from chi0_emos.model.emos.RollingPrediction import RollingPrediction
from chi0_emos.model.error.Emos import InsufficientDataException
from chi0_emos.model.numerics import QuadratureSpec
from chi0_emos.model.optimizer import SimplexConfig

DEFAULT_WINDOW = 30


def prediction_days(series: StationSeries, window_size: int = DEFAULT_WINDOW) -> np.ndarray:
    """Row indices that have `window_size` consecutive preceding days.

    A gap in the calendar resets the window; predictions resume once it refills.
    """
    if window_size < 1:
        raise ValueError(f"window_size must be >= 1, got {window_size}")
    if series.size < window_size + 1:
        raise InsufficientDataException(
            f"Station {series.station} has {series.size} days, a window of {window_size} needs at least {window_size + 1}"
        )
    run = series.consecutive_run()
    days = np.flatnonzero(run >= window_size + 1)
    gaps = int(np.sum(run[1:] == 1))
    if gaps:
        logging.info(f"Station {series.station}: {gaps} calendar gap(s) reset the training window")
    return days


def training_window(series: StationSeries, day: int, window_size: int = DEFAULT_WINDOW) -> TrainingWindow:
    return TrainingWindow(
        members=series.members[day - window_size : day],
        observations=series.observations[day - window_size : day],
    )


def rolling_forecast(
    series: StationSeries,
    family: Family = Family.CHI0,
    window_size: int = DEFAULT_WINDOW,
    warm_start: bool = False,
    config: SimplexConfig = DEFAULT_CONFIG,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> list[RollingPrediction]:
    """Train on each preceding window and predict the following day.

    With a gap-free series of length n this emits n - window_size predictions. Every
    window starts from a = 0.5, b = c = d = 1 unless `warm_start` is set, in which
    case it starts from the previous window's optimum. The CSG0 shift is fitted once,
    climatologically on the first training window, and held for the whole station.

    Raises:
        InsufficientDataException: If the series is shorter than window_size + 1 days.
    """
    days = prediction_days(series, window_size)
    if days.size == 0:
        raise InsufficientDataException(
            f"Station {series.station} has no run of {window_size + 1} consecutive days"
        )
    logging.info(f"Station {series.station}: rolling {family.value} over {days.size} verification days")

    default_start = EmosCoefficients.default_start(family)
    if family == Family.CSG0:
        first_window = training_window(series, int(days[0]), window_size)
        shift = climatological_shift(first_window.observations, config, spec)
        logging.info(f"Station {series.station}: CSG0 shift held at {shift:.4f}")
        default_start = replace(default_start, extra=shift)
    previous: EmosCoefficients | None = None
    predictions = []
    for day in days:
        start = previous if (warm_start and previous is not None) else default_start
        window = training_window(series, day, window_size)
        coefficients, diagnostics = train_window(window, family, start, config, spec)
        if not diagnostics.converged:
            logging.warning(
                f"Station {series.station}, {series.dates[day]}: {family.value} window did not converge "
                f"after {diagnostics.evals} evaluations"
            )
        assert diagnostics.objective <= diagnostics.start_objective
        previous = coefficients
        forecast = EnsembleForecast.from_members(series.members[day])
        predictions.append(
            RollingPrediction(
                date=series.dates[day].astype(object),
                distribution=link(coefficients, forecast),
                observation=float(series.observations[day]),
                members=forecast.members,
                coefficients=coefficients,
                diagnostics=diagnostics,
            )
        )
    return predictions
