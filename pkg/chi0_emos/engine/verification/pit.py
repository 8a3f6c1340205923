import numpy as np

from chi0_emos.engine.distributions import DistributionBatch, PredictiveDistribution
from chi0_emos.model.error.Distribution import DomainException
from chi0_emos.model.verification import PitValue


def _randomized_atom(cdf_at_zero, rng: np.random.Generator):
    # 1 - U with U in [0, 1) lies in (0, 1], so the value is never 0 unless CDF(0) is
    return cdf_at_zero * (1.0 - rng.random(np.shape(cdf_at_zero)))


def pit(dist: PredictiveDistribution, y: float, rng: np.random.Generator) -> PitValue:
    """Probability integral transform of an observation, randomized on the zero atom.

    A positive observation maps to CDF(y). An observation of exactly 0 falls on the
    point mass, and its PIT is drawn uniformly from (0, CDF(0)].

    Raises:
        DomainException: If y < 0.
    """
    if not y >= 0.0:
        raise DomainException(f"Observation must be >= 0, got {y}")
    if y > 0.0:
        return PitValue(value=float(np.clip(dist.cdf(y), 0.0, 1.0)), randomized=False)
    atom = float(dist.cdf(0.0))
    return PitValue(value=float(_randomized_atom(atom, rng)), randomized=True)


def pit_batch(batch: DistributionBatch, observations, rng: np.random.Generator) -> np.ndarray:
    """PIT values of a whole batch; zero observations draw from the generator in case order."""
    y = np.asarray(observations, dtype=float)
    if y.size != batch.size:
        raise ValueError(f"{y.size} observations for {batch.size} distributions")
    if np.any(~(y >= 0.0)):
        raise DomainException("Observations must be >= 0")
    values = np.clip(batch.cdf(y), 0.0, 1.0)
    zero = y == 0.0
    if zero.any():
        values[zero] = _randomized_atom(values[zero], rng)
    return values
