from .histogram import histogram, uniformity_pvalue
from .pit import pit, pit_batch
from .ranks import rank_histogram, verification_rank, verification_ranks
from .reliability import diagonal_deviation, reliability_diagram

__all__ = [
    "diagonal_deviation",
    "histogram",
    "pit",
    "pit_batch",
    "rank_histogram",
    "reliability_diagram",
    "uniformity_pvalue",
    "verification_rank",
    "verification_ranks",
]
