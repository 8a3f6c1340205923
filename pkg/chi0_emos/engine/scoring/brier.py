import numpy as np

from chi0_emos.engine.distributions import DistributionBatch, PredictiveDistribution
from chi0_emos.engine.scoring.isotonic import pav_isotonic
from chi0_emos.model.error.Dataset import EmptyInputException
from chi0_emos.model.error.Distribution import DomainException
from chi0_emos.model.scoring import BrierDecomposition


def validated_pairs(probs, outcomes) -> tuple[np.ndarray, np.ndarray]:
    probs = np.asarray(probs, dtype=float).ravel()
    outcomes = np.asarray(outcomes, dtype=float).ravel()
    if probs.size != outcomes.size:
        raise ValueError(f"{probs.size} probabilities for {outcomes.size} outcomes")
    if probs.size == 0:
        raise EmptyInputException("Brier score needs at least one forecast")
    if np.any(~np.isfinite(probs)) or np.any(probs < 0.0) or np.any(probs > 1.0):
        raise ValueError("Forecast probabilities must lie in [0, 1]")
    if np.any((outcomes != 0.0) & (outcomes != 1.0)):
        raise ValueError("Outcomes must be 0 or 1")
    return probs, outcomes


def brier_score(probs, outcomes) -> float:
    """Mean of (p_i - y_i)^2."""
    probs, outcomes = validated_pairs(probs, outcomes)
    return float(np.mean((probs - outcomes) ** 2))


def _check_threshold(threshold: float):
    if not threshold >= 0.0:
        raise DomainException(f"Event threshold must be >= 0, got {threshold}")


def event_probability(dist: PredictiveDistribution, threshold: float) -> float:
    """Probability of the event '> threshold', i.e. 1 - CDF(threshold)."""
    _check_threshold(threshold)
    return 1.0 - float(dist.cdf(threshold))


def event_probability_batch(batch: DistributionBatch, threshold: float) -> np.ndarray:
    _check_threshold(threshold)
    return np.clip(batch.survival(np.full(batch.size, float(threshold)), np.arange(batch.size)), 0.0, 1.0)


def ensemble_event_frequency(members, threshold: float) -> float | np.ndarray:
    """Share of members strictly above the threshold; rows of a 2-D array are cases."""
    _check_threshold(threshold)
    members = np.asarray(members, dtype=float)
    if members.size == 0 or members.shape[-1] == 0:
        raise EmptyInputException("Ensemble event frequency needs at least one member")
    frequency = np.mean(members > threshold, axis=-1)
    return float(frequency) if members.ndim == 1 else frequency


def brier_decomposition(probs, outcomes) -> BrierDecomposition:
    """CORP decomposition mean Brier = MCB - DSC + UNC.

    The recalibrated forecast is the isotonic (PAV) fit of the outcomes on the
    forecast probabilities; the reference forecast is the base rate.
    """
    probs, outcomes = validated_pairs(probs, outcomes)
    fitted = pav_isotonic(probs, outcomes)
    base_rate = float(np.mean(outcomes))

    score = float(np.mean((probs - outcomes) ** 2))
    recalibrated = float(np.mean((fitted - outcomes) ** 2))
    reference = float(np.mean((base_rate - outcomes) ** 2))
    return BrierDecomposition(
        mean_brier=score,
        mcb=max(score - recalibrated, 0.0),
        dsc=max(reference - recalibrated, 0.0),
        unc=reference,
        event_count=int(outcomes.sum()),
        count=int(outcomes.size),
    )
