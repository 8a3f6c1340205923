from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class RankHistogram:
    """Verification rank counts of an m-member ensemble.

    Attributes:
      - counts (tuple[int, ...]): Occurrences of ranks 1..m+1.
      - total (int): Number of cases.
    """

    counts: tuple[int, ...]
    total: int

    def __post_init__(self):
        if sum(self.counts) != self.total:
            raise ValueError(f"Rank counts sum to {sum(self.counts)}, expected {self.total}")
        if any(c < 0 for c in self.counts):
            raise ValueError("Rank counts must be nonnegative")

    @property
    def member_count(self) -> int:
        return len(self.counts) - 1

    @classmethod
    def from_ranks(cls, ranks, member_count: int) -> "RankHistogram":
        ranks = np.asarray(ranks, dtype=int)
        counts = np.bincount(ranks - 1, minlength=member_count + 1)
        return cls(counts=tuple(int(c) for c in counts), total=int(ranks.size))
