from .PitValue import PitValue
from .RankHistogram import RankHistogram

__all__ = ["PitValue", "RankHistogram"]
