import numpy as np
from scipy import stats

from chi0_emos.model.error.Dataset import EmptyInputException


def histogram(values, bins: int = 20) -> np.ndarray:
    """Counts of values in equal-width bins on [0, 1].

    Bins are right-closed, (k/bins, (k+1)/bins], except the first one which also
    holds 0.

    Raises:
        ValueError: If bins < 1 or a value lies outside [0, 1].
    """
    if bins < 1:
        raise ValueError(f"bins must be >= 1, got {bins}")
    values = np.asarray(values, dtype=float).ravel()
    if np.any(~((values >= 0.0) & (values <= 1.0))):
        raise ValueError("Histogram values must lie in [0, 1]")
    index = np.clip(np.ceil(values * bins).astype(int) - 1, 0, bins - 1)
    return np.bincount(index, minlength=bins)


def uniformity_pvalue(counts) -> float:
    """Chi-square goodness-of-fit p-value of the counts against a flat histogram."""
    counts = np.asarray(counts, dtype=float).ravel()
    if counts.size < 2:
        raise ValueError("Uniformity test needs at least two bins")
    if counts.sum() <= 0:
        raise EmptyInputException("Uniformity test needs at least one count")
    return float(stats.chisquare(counts).pvalue)
