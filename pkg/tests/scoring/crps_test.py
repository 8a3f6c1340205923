import math

import numpy as np
import pytest
from scipy import integrate as scipy_integrate

from chi0_emos.engine.distributions import DistributionBatch, PredictiveDistribution
from chi0_emos.engine.scoring import crps_batch, crps_distribution, crps_ensemble, crps_ensemble_array
from chi0_emos.model.error.Dataset import EmptyInputException
from chi0_emos.model.error.Distribution import DomainException

DISTRIBUTIONS = [
    PredictiveDistribution.chi0(lam=2.0, sigma=1.5),
    PredictiveDistribution.chi0(lam=0.3, sigma=4.0),
    PredictiveDistribution.csg0(shape=1.2, scale=3.0, shift=0.8),
    PredictiveDistribution.gev0(location=1.0, scale=2.0, shape=0.2),
]


def reference_crps(dist: PredictiveDistribution, y: float) -> float:
    below, _ = scipy_integrate.quad(lambda x: dist.cdf(x) ** 2, 0.0, y, epsabs=1e-12) if y > 0.0 else (0.0, 0.0)
    above, _ = scipy_integrate.quad(lambda x: (1.0 - dist.cdf(x)) ** 2, y, np.inf, epsabs=1e-12, limit=200)
    return below + above


@pytest.mark.scoring
def test_if_point_mass_scores_the_distance():
    """Verify that the point mass at 0 scores 0 at y = 0 and 2 at y = 2."""
    dist = PredictiveDistribution.chi0(lam=0.0, sigma=1.0)
    assert crps_distribution(dist, 0.0) == pytest.approx(0.0, abs=1e-12)
    assert crps_distribution(dist, 2.0) == pytest.approx(2.0, abs=1e-10)


@pytest.mark.scoring
@pytest.mark.parametrize("dist", DISTRIBUTIONS, ids=lambda d: d.family.value)
@pytest.mark.parametrize("y", [0.0, 0.7, 3.0, 12.0])
def test_if_quadrature_matches_reference_integral(dist, y):
    """Verify that the CRPS agrees with an independent adaptive integral of the same definition."""
    assert crps_distribution(dist, y) == pytest.approx(reference_crps(dist, y), abs=1e-7)


@pytest.mark.scoring
def test_if_batch_matches_single_scores():
    """Verify that batched CRPS equals the single-case scores and reports small error estimates."""
    dists = [PredictiveDistribution.chi0(lam, sigma) for lam, sigma in [(0.5, 2.0), (3.0, 1.0), (8.0, 0.5)]]
    y = np.array([0.0, 2.5, 4.0])
    scores, errors, converged = crps_batch(DistributionBatch.from_distributions(dists), y)
    assert converged.all()
    assert np.all(errors < 1e-6)
    np.testing.assert_allclose(scores, [crps_distribution(d, v) for d, v in zip(dists, y)], atol=1e-12)


@pytest.mark.scoring
def test_if_negative_observation_is_rejected():
    """Verify that y < 0 raises DomainException."""
    with pytest.raises(DomainException):
        crps_distribution(DISTRIBUTIONS[0], -0.5)


@pytest.mark.scoring
@pytest.mark.monte_carlo
def test_if_crps_matches_energy_form(rng):
    """Verify that the CRPS equals E|X - y| - E|X - X'| / 2 estimated from samples."""
    n = 200_000
    for dist in DISTRIBUTIONS:
        x1 = dist.sample(rng, n)
        x2 = dist.sample(rng, n)
        for y in [0.0, 2.0, 6.0]:
            terms = np.abs(x1 - y) - 0.5 * np.abs(x1 - x2)
            se = terms.std() / math.sqrt(n)
            assert abs(terms.mean() - crps_distribution(dist, y)) < 4.0 * se


@pytest.mark.scoring
def test_if_ensemble_crps_matches_known_values():
    """Verify that {3} against 1 scores 2 and {0, 2} against 1 scores 0.5."""
    assert crps_ensemble([3.0], 1.0) == pytest.approx(2.0)
    assert crps_ensemble([0.0, 2.0], 1.0) == pytest.approx(0.5)


@pytest.mark.scoring
def test_if_ensemble_crps_matches_double_sum(rng):
    """Verify that the sorted form equals the direct double sum."""
    members = rng.gamma(1.0, 3.0, size=(20, 7))
    y = rng.gamma(1.0, 3.0, size=20)
    direct = np.abs(members - y[:, None]).mean(axis=1) - 0.5 * np.abs(
        members[:, :, None] - members[:, None, :]
    ).mean(axis=(1, 2))
    np.testing.assert_allclose(crps_ensemble_array(members, y), direct, atol=1e-12)


@pytest.mark.scoring
def test_if_empty_ensemble_is_rejected():
    """Verify that an ensemble without members raises EmptyInputException."""
    with pytest.raises(EmptyInputException):
        crps_ensemble([], 1.0)


def random_distribution(rng: np.random.Generator) -> PredictiveDistribution:
    match rng.integers(3):
        case 0:
            return PredictiveDistribution.chi0(lam=rng.uniform(0.5, 10.0), sigma=rng.uniform(0.3, 3.0))
        case 1:
            return PredictiveDistribution.csg0(
                shape=rng.uniform(0.5, 3.0), scale=rng.uniform(0.5, 3.0), shift=rng.uniform(0.0, 1.0)
            )
        case _:
            return PredictiveDistribution.gev0(
                location=rng.uniform(0.0, 3.0), scale=rng.uniform(0.5, 2.0), shape=rng.uniform(0.0, 0.3)
            )


def mean_crps(dist: PredictiveDistribution, y: np.ndarray) -> float:
    scores, _, _ = crps_batch(DistributionBatch.from_distributions([dist] * y.size), y)
    return float(scores.mean())


@pytest.mark.scoring
@pytest.mark.monte_carlo
def test_if_true_distribution_scores_best(rng):
    """Verify that outcomes drawn from a law score no worse under it than under another law, in 9 of 10 pairs."""
    wins = 0
    for _ in range(10):
        dist, other = random_distribution(rng), random_distribution(rng)
        y = dist.sample(rng, 10_000)
        own = mean_crps(dist, y)
        assert own >= 0.0
        wins += own <= mean_crps(other, y)
    assert wins >= 9
