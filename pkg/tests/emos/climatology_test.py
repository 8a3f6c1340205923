import numpy as np
import pytest

from chi0_emos.engine.distributions import PredictiveDistribution, csg0_cdf
from chi0_emos.engine.emos import climatological_fit, climatological_shift, climatology_objective
from chi0_emos.model.error.Dataset import EmptyInputException


@pytest.mark.emos
def test_if_fitted_atom_matches_dry_share(rng):
    """Verify that the climatological law puts about the observed share of zeros on its atom."""
    truth = PredictiveDistribution.csg0(shape=2.0, scale=1.5, shift=1.0)
    observations = truth.sample(rng, 200)
    fit = climatological_fit(observations)
    assert 0.0 <= fit.shift <= observations.max()
    assert abs(csg0_cdf(0.0, fit) - np.mean(observations == 0.0)) < 0.1


@pytest.mark.emos
def test_if_shift_never_exceeds_largest_observation():
    """Verify that a shift beyond the sample maximum is rejected by the objective."""
    observations = np.array([0.0, 0.0, 0.5, 1.0])
    assert climatology_objective([1.0, 1.0, 1.1], observations) == np.inf
    assert np.isfinite(climatology_objective([1.0, 1.0, 0.5], observations))


@pytest.mark.emos
def test_if_dry_sample_has_no_shift():
    """Verify that an all-zero sample falls back to no shift and an empty one is refused."""
    assert climatological_shift(np.zeros(30)) == 0.0
    with pytest.raises(EmptyInputException):
        climatological_fit([])
