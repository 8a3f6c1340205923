from dataclasses import dataclass

import numpy as np

from chi0_emos.model.error.Dataset import EmptyInputException


@dataclass(frozen=True)
class ScoreReport:
    """Per-case scores with their aggregates.

    Attributes:
      - per_case (tuple[tuple[str, float], ...]): (case id, score) pairs in emission order.
      - mean (float): Arithmetic mean of the scores.
      - max (float): Largest score.
      - count (int): Number of cases.
    """

    per_case: tuple[tuple[str, float], ...]
    mean: float
    max: float
    count: int

    @classmethod
    def from_scores(cls, case_ids, scores) -> "ScoreReport":
        scores = np.asarray(scores, dtype=float)
        case_ids = [str(c) for c in case_ids]
        if scores.size == 0:
            raise EmptyInputException("A score report needs at least one case")
        if len(case_ids) != scores.size:
            raise ValueError(f"{len(case_ids)} case ids for {scores.size} scores")
        return cls(
            per_case=tuple(zip(case_ids, scores.tolist())),
            mean=float(np.mean(scores)),
            max=float(np.max(scores)),
            count=int(scores.size),
        )
