import math

import numpy as np
import pytest

from chi0_emos.engine.emos import climatological_shift, link, mean_crps_objective, train_window
from chi0_emos.engine.pipeline import TRUE_COEFFICIENTS, synthetic_station
from chi0_emos.engine.scoring import crps_distribution
from chi0_emos.model.distribution import Family
from chi0_emos.model.emos import EmosCoefficients, EnsembleForecast, TrainingWindow
from chi0_emos.model.optimizer import SimplexConfig


@pytest.fixture
def window(rng) -> TrainingWindow:
    series = synthetic_station("T", rng, days=30, members=10)
    return TrainingWindow(members=series.members, observations=series.observations)


@pytest.mark.emos
def test_if_objective_is_mean_crps(window):
    """Verify that the objective equals the average of single-case CRPS values."""
    coefficients = EmosCoefficients.default_start()
    expected = np.mean(
        [
            crps_distribution(link(coefficients, EnsembleForecast.from_members(members)), y)
            for members, y in zip(window.members, window.observations)
        ]
    )
    assert mean_crps_objective(coefficients.to_vector(), window, Family.CHI0) == pytest.approx(expected, rel=1e-6)


@pytest.mark.emos
def test_if_infeasible_proposals_score_infinity(window):
    """Verify that constraint violations and failed moment matching give +inf."""
    assert mean_crps_objective([0.5, 1.0, 1.0, 1.0, -1.0], window, Family.CSG0) == math.inf
    assert mean_crps_objective([0.5, 1.0, 1.0, 1.0, 0.7], window, Family.GEV0) == math.inf
    assert mean_crps_objective([0.0, 0.0, 1.0, 1.0, 0.1], window, Family.CSG0) == math.inf


@pytest.mark.emos
@pytest.mark.parametrize("family", list(Family), ids=lambda f: f.value)
def test_if_training_descends(window, family):
    """Verify that training never ends above the starting mean CRPS."""
    coefficients, diagnostics = train_window(window, family)
    assert coefficients.family == family
    assert diagnostics.objective <= diagnostics.start_objective
    assert math.isfinite(diagnostics.objective)
    assert diagnostics.evals > 0


@pytest.mark.emos
def test_if_all_zero_window_drives_intercept_down():
    """Verify that a window of dry forecasts and dry observations pushes lam = a^2 towards 0."""
    window = TrainingWindow(members=np.zeros((30, 5)), observations=np.zeros(30))
    coefficients, diagnostics = train_window(window, Family.CHI0)
    assert diagnostics.objective < 0.5 * diagnostics.start_objective
    assert coefficients.a**2 < 0.25


@pytest.mark.emos
def test_if_start_family_must_match(window):
    """Verify that starting coefficients of another family are refused."""
    with pytest.raises(ValueError):
        train_window(window, Family.CHI0, EmosCoefficients.default_start(Family.CSG0))


@pytest.mark.emos
def test_if_restart_from_optimum_stays_put(window):
    """Verify that training again from a polished optimum changes the objective by less than f_tol."""
    polished = SimplexConfig(x_tol=1e-9, f_tol=1e-12)
    coefficients, first = train_window(window, Family.CHI0, config=polished)
    _, second = train_window(window, Family.CHI0, start=coefficients)
    assert second.start_objective == pytest.approx(first.objective, abs=1e-15)
    assert first.objective - second.objective < SimplexConfig().f_tol


@pytest.mark.emos
def test_if_true_coefficients_beat_perturbations(rng):
    """Verify that on a long Chi0 sample the generating coefficients score below 10 perturbed vectors."""
    series = synthetic_station("T", rng, days=500, members=10)
    window = TrainingWindow(members=series.members, observations=series.observations)
    truth = TRUE_COEFFICIENTS.to_vector()
    at_truth = mean_crps_objective(truth, window, Family.CHI0)
    for _ in range(10):
        step = rng.choice([-1.0, 1.0], truth.size) * rng.uniform(0.3, 0.6, truth.size)
        assert at_truth <= mean_crps_objective(np.abs(truth) + step, window, Family.CHI0)


@pytest.mark.emos
def test_if_censored_gamma_shift_is_held(window):
    """Verify that CSG0 training keeps the starting shift and converges within the budget."""
    start = EmosCoefficients(0.5, 1.0, 1.0, 1.0, Family.CSG0, 0.4)
    coefficients, diagnostics = train_window(window, Family.CSG0, start)
    assert coefficients.extra == 0.4
    assert diagnostics.converged

    coefficients, _ = train_window(window, Family.CSG0)
    assert coefficients.extra == pytest.approx(climatological_shift(window.observations), abs=1e-12)
