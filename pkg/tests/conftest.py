import numpy as np
import pytest

from chi0_emos.engine.pipeline import synthetic_dataset

SEED = 20240917


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(SEED)


@pytest.fixture(scope="session")
def small_dataset():
    """Two synthetic stations of 40 days with 10 members."""
    return synthetic_dataset(SEED, stations=2, days=40, members=10)


@pytest.fixture(scope="session")
def acceptance_dataset():
    """One synthetic station of 200 days with 50 members, observations from Chi0."""
    return synthetic_dataset(SEED, stations=1, days=200, members=50)
