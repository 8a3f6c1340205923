import numpy as np

from chi0_emos.model.data.RunConfig import RANK_TIE_MODES
from chi0_emos.model.error.Dataset import EmptyInputException
from chi0_emos.model.verification import RankHistogram


def _check_ties(ties: str):
    if ties not in RANK_TIE_MODES:
        raise ValueError(f"Unknown rank tie mode {ties}, expected one of {RANK_TIE_MODES}")


def verification_rank(members, y: float, rng: np.random.Generator, ties: str = "random") -> int:
    """Rank of the observation within the ensemble, in 1..m+1.

    Members equal to the observation are ties. With `ties="random"` the observation
    is placed uniformly at random among them; `ties="mid"` takes the middle slot
    (rounded down) and draws nothing from the generator.
    """
    _check_ties(ties)
    members = np.asarray(members, dtype=float).ravel()
    if members.size == 0:
        raise EmptyInputException("Verification rank needs at least one member")
    below = int(np.sum(members < y))
    equal = int(np.sum(members == y))
    if ties == "mid":
        return 1 + below + equal // 2
    return 1 + below + int(rng.integers(0, equal + 1))


def verification_ranks(members, observations, rng: np.random.Generator, ties: str = "random") -> np.ndarray:
    """Ranks of many cases; rows of `members` are cases."""
    _check_ties(ties)
    members = np.asarray(members, dtype=float)
    y = np.asarray(observations, dtype=float)
    if members.ndim != 2 or members.shape[1] == 0:
        raise EmptyInputException("Verification ranks need a (cases, members) array with members")
    if members.shape[0] != y.size:
        raise ValueError(f"{members.shape[0]} ensembles for {y.size} observations")
    below = np.sum(members < y[:, None], axis=1)
    equal = np.sum(members == y[:, None], axis=1)
    if ties == "mid":
        return 1 + below + equal // 2
    return 1 + below + rng.integers(0, equal + 1)


def rank_histogram(members, observations, rng: np.random.Generator, ties: str = "random") -> RankHistogram:
    members = np.asarray(members, dtype=float)
    ranks = verification_ranks(members, observations, rng, ties)
    return RankHistogram.from_ranks(ranks, members.shape[1])
