import numpy as np
import pytest

from chi0_emos.engine.verification import diagonal_deviation, reliability_diagram


@pytest.mark.verification
def test_if_segments_are_nondecreasing(rng):
    """Verify that fitted conditional event probabilities never decrease across segments."""
    probs = rng.uniform(0.0, 1.0, 300)
    outcomes = (rng.uniform(0.0, 1.0, 300) < probs ** 2).astype(int)
    diagram = reliability_diagram(probs, outcomes)
    ceps = [b.fitted_cep for b in diagram.bins]
    assert all(later >= earlier for earlier, later in zip(ceps, ceps[1:]))
    assert sum(b.case_count for b in diagram.bins) == 300
    assert len(diagram.pairs) == 300


@pytest.mark.verification
def test_if_violating_pair_collapses_to_one_segment():
    """Verify that {0.3, 0.7} with outcomes {1, 0} form one segment at 0.5."""
    diagram = reliability_diagram([0.3, 0.7], [1, 0])
    assert len(diagram.bins) == 1
    assert diagram.bins[0].forecast_range == (0.3, 0.7)
    assert diagram.bins[0].fitted_cep == 0.5


@pytest.mark.verification
@pytest.mark.monte_carlo
def test_if_calibrated_forecasts_stay_near_diagonal(rng):
    """Verify that calibrated forecasts keep every segment close to the diagonal."""
    probs = rng.uniform(0.0, 1.0, 20_000).round(2)
    outcomes = (rng.uniform(0.0, 1.0, probs.size) < probs).astype(int)
    assert diagonal_deviation(reliability_diagram(probs, outcomes)) < 0.1


@pytest.mark.verification
def test_if_invalid_pairs_are_rejected():
    """Verify that probabilities outside [0, 1] raise ValueError."""
    with pytest.raises(ValueError):
        reliability_diagram([1.5], [1])
