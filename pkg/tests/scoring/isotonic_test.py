import itertools

import numpy as np
import pytest

from chi0_emos.engine.scoring import pav_blocks, pav_isotonic
from chi0_emos.model.error.Dataset import EmptyInputException


def brute_force_isotonic(y: np.ndarray) -> np.ndarray:
    """Best nondecreasing fit over all partitions of the sorted cases into contiguous blocks."""
    n = y.size
    best, best_sse = None, np.inf
    for cuts in itertools.product([False, True], repeat=n - 1):
        edges = [0] + [i + 1 for i, cut in enumerate(cuts) if cut] + [n]
        means = [y[a:b].mean() for a, b in zip(edges, edges[1:])]
        if any(later < earlier for earlier, later in zip(means, means[1:])):
            continue
        fit = np.concatenate([np.full(b - a, m) for (a, b), m in zip(zip(edges, edges[1:]), means)])
        sse = float(np.sum((fit - y) ** 2))
        if sse < best_sse - 1e-15:
            best, best_sse = fit, sse
    return best


@pytest.mark.scoring
def test_if_violating_pair_is_pooled():
    """Verify that forecasts {0.3, 0.7} with outcomes {1, 0} both get 0.5."""
    np.testing.assert_allclose(pav_isotonic([0.3, 0.7], [1.0, 0.0]), [0.5, 0.5])


@pytest.mark.scoring
@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
def test_if_fit_matches_brute_force(rng, n):
    """Verify that the PAV fit equals the exhaustive least-squares monotone fit."""
    for _ in range(10):
        x = rng.permutation(n).astype(float) / n
        y = rng.integers(0, 2, n).astype(float)
        order = np.argsort(x)
        fitted = pav_isotonic(x, y)
        np.testing.assert_allclose(fitted[order], brute_force_isotonic(y[order]), atol=1e-12)


@pytest.mark.scoring
def test_if_fit_is_monotone_and_preserves_sum(rng):
    """Verify that the fit is nondecreasing in x and keeps the total of y."""
    x = rng.uniform(0.0, 1.0, 200)
    y = (rng.uniform(0.0, 1.0, 200) < x).astype(float)
    fitted = pav_isotonic(x, y)
    assert np.all(np.diff(fitted[np.argsort(x)]) >= -1e-15)
    assert fitted.sum() == pytest.approx(y.sum())


@pytest.mark.scoring
def test_if_ties_share_one_value():
    """Verify that equal forecasts receive the same fitted value."""
    fitted = pav_isotonic([0.5, 0.2, 0.5, 0.5], [1.0, 0.0, 0.0, 0.0])
    assert fitted[0] == fitted[2] == fitted[3] == pytest.approx(1.0 / 3.0)
    assert fitted[1] == 0.0


@pytest.mark.scoring
def test_if_blocks_describe_segments():
    """Verify that blocks report their forecast range, fitted value and size."""
    blocks = pav_blocks([0.1, 0.3, 0.7, 0.9], [0.0, 1.0, 0.0, 1.0])
    assert blocks == [(0.1, 0.1, 0.0, 1), (0.3, 0.7, 0.5, 2), (0.9, 0.9, 1.0, 1)]


@pytest.mark.scoring
def test_if_empty_input_is_rejected():
    """Verify that an empty input raises EmptyInputException."""
    with pytest.raises(EmptyInputException):
        pav_isotonic([], [])
