from .brier import (
    brier_decomposition,
    brier_score,
    ensemble_event_frequency,
    event_probability,
    event_probability_batch,
)
from .crps import crps_batch, crps_distribution, crps_ensemble, crps_ensemble_array
from .isotonic import pav_blocks, pav_isotonic

__all__ = [
    "brier_decomposition",
    "brier_score",
    "crps_batch",
    "crps_distribution",
    "crps_ensemble",
    "crps_ensemble_array",
    "ensemble_event_frequency",
    "event_probability",
    "event_probability_batch",
    "pav_blocks",
    "pav_isotonic",
]
