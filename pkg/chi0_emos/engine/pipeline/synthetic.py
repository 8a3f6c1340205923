"""Synthetic stations for experiments and tests.

Each day draws a latent intensity; dry days give an all-zero ensemble. On wet days
the members scatter tightly around the intensity, so the raw ensemble is
underdispersed against observations drawn from the scaled Chi0 law

    lam = 0.25 + mean(f),  sigma = 1 + 0.5 * sd(f),

which is the Chi0 link at a = 0.5, b = 1, c = 1, d = sqrt(0.5).
"""

import logging
import math
from datetime import date

import numpy as np

from chi0_emos.engine.emos.link import linear_predictors
from chi0_emos.model.data import ForecastDataset, StationSeries
from chi0_emos.model.distribution import Family
from chi0_emos.model.emos import EmosCoefficients, TrainingWindow

TRUE_COEFFICIENTS = EmosCoefficients(a=0.5, b=1.0, c=1.0, d=math.sqrt(0.5), family=Family.CHI0)
DRY_PROBABILITY = 0.12
INTENSITY_SHAPE = 0.8
INTENSITY_SCALE = 4.0
# members ~ intensity * Gamma(k, 1/k): coefficient of variation 1/sqrt(k)
MEMBER_SPREAD_SHAPE = 25.0
START_DATE = date(2020, 1, 1)


def synthetic_ensemble(rng: np.random.Generator, days: int, members: int) -> np.ndarray:
    """(days, members) forecasts with a share of all-zero days."""
    wet = rng.random(days) >= DRY_PROBABILITY
    intensity = np.where(wet, rng.gamma(INTENSITY_SHAPE, INTENSITY_SCALE, days), 0.0)
    spread = rng.gamma(MEMBER_SPREAD_SHAPE, 1.0 / MEMBER_SPREAD_SHAPE, (days, members))
    # light intensities leave some members dry
    dry_member = rng.random((days, members)) < np.exp(-2.0 * intensity)[:, None]
    return np.where(dry_member, 0.0, intensity[:, None] * spread)


def synthetic_station(
    station: str,
    rng: np.random.Generator,
    days: int = 200,
    members: int = 50,
    coefficients: EmosCoefficients = TRUE_COEFFICIENTS,
    start: date = START_DATE,
) -> StationSeries:
    """A gap-free station whose observations follow Chi0 under `coefficients`."""
    if days < 1 or members < 1:
        raise ValueError(f"days and members must be >= 1, got {days} and {members}")
    forecasts = synthetic_ensemble(rng, days, members)
    lam, sigma = true_parameters(forecasts, coefficients)
    # compound Poisson draw, as in chi0_sample but with per-row parameters
    j = rng.poisson(0.5 * lam)
    draws = rng.gamma(shape=np.maximum(j, 1), scale=2.0)
    observations = np.where(j > 0, sigma * draws, 0.0)
    dates = np.datetime64(start, "D") + np.arange(days)
    return StationSeries(station=station, dates=dates, observations=observations, members=forecasts)


def synthetic_dataset(
    seed: int,
    stations: int = 1,
    days: int = 200,
    members: int = 50,
    coefficients: EmosCoefficients = TRUE_COEFFICIENTS,
    start: date = START_DATE,
) -> ForecastDataset:
    """Stations S01.. drawn from one seeded generator, in order."""
    rng = np.random.default_rng(seed)
    series = tuple(
        synthetic_station(f"S{k:02d}", rng, days, members, coefficients, start)
        for k in range(1, stations + 1)
    )
    all_zero = sum(int(np.all(s.members == 0.0, axis=1).sum()) for s in series)
    logging.info(
        f"Simulated {stations} station(s) x {days} days, {members} members "
        f"({all_zero} all-zero ensembles)"
    )
    return ForecastDataset(stations=series, member_count=members)


def true_parameters(members, coefficients: EmosCoefficients = TRUE_COEFFICIENTS) -> tuple[np.ndarray, np.ndarray]:
    """Generating Chi0 (lam, sigma) of every row of a (days, members) forecast array."""
    members = np.atleast_2d(np.asarray(members, dtype=float))
    window = TrainingWindow(members=members, observations=np.zeros(members.shape[0]))
    return linear_predictors(coefficients.to_vector(), window.means, window.sds)
