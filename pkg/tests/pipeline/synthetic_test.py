import math

import numpy as np
import pytest

from chi0_emos.engine.pipeline import synthetic_dataset, synthetic_station, true_parameters


@pytest.mark.pipeline
def test_if_dataset_is_reproducible():
    """Verify that one seed gives identical stations."""
    first = synthetic_dataset(5, stations=2, days=30, members=6)
    second = synthetic_dataset(5, stations=2, days=30, members=6)
    assert first.station_names == ["S01", "S02"]
    for a, b in zip(first.stations, second.stations):
        np.testing.assert_array_equal(a.members, b.members)
        np.testing.assert_array_equal(a.observations, b.observations)


@pytest.mark.pipeline
def test_if_station_has_dry_days_and_consecutive_dates(rng):
    """Verify that the station is gap-free and contains all-zero ensembles and zero observations."""
    series = synthetic_station("S", rng, days=300, members=8)
    assert np.all(np.diff(series.dates) == np.timedelta64(1, "D"))
    assert np.any(np.all(series.members == 0.0, axis=1))
    assert np.any(series.observations == 0.0)
    assert np.all(series.observations >= 0.0)


@pytest.mark.pipeline
def test_if_true_parameters_follow_generating_link():
    """Verify that the generating law is lam = 0.25 + mean and sigma = 1 + 0.5 sd."""
    lam, sigma = true_parameters(np.array([[1.0, 3.0], [0.0, 0.0]]))
    np.testing.assert_allclose(lam, [2.25, 0.25])
    np.testing.assert_allclose(sigma, [1.0 + 0.5 * math.sqrt(2.0), 1.0])


@pytest.mark.pipeline
def test_if_invalid_sizes_are_refused(rng):
    """Verify that zero days or members raise ValueError."""
    with pytest.raises(ValueError):
        synthetic_station("S", rng, days=0)
