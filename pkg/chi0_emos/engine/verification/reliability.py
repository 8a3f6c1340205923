import numpy as np

from chi0_emos.engine.scoring import pav_blocks
from chi0_emos.engine.scoring.brier import validated_pairs
from chi0_emos.model.scoring import ReliabilityBin, ReliabilityDiagramData


def reliability_diagram(probs, outcomes) -> ReliabilityDiagramData:
    """CORP reliability diagram: PAV segments of the outcomes on the forecast probabilities.

    The fitted conditional event probabilities are nondecreasing from bin to bin.
    """
    probs, outcomes = validated_pairs(probs, outcomes)
    bins = tuple(
        ReliabilityBin(forecast_range=(lo, hi), fitted_cep=cep, case_count=count)
        for lo, hi, cep, count in pav_blocks(probs, outcomes)
    )
    pairs = tuple((float(p), int(o)) for p, o in zip(probs, outcomes.astype(int)))
    return ReliabilityDiagramData(bins=bins, pairs=pairs)


def diagonal_deviation(diagram: ReliabilityDiagramData) -> float:
    """Largest distance of a segment's CEP from the diagonal over its forecast range."""
    deviations = [
        max(abs(b.fitted_cep - b.forecast_range[0]), abs(b.fitted_cep - b.forecast_range[1]))
        for b in diagram.bins
    ]
    return float(np.max(deviations))
