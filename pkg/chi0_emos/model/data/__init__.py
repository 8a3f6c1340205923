from .ForecastDataset import ForecastDataset
from .RunConfig import RANK_TIE_MODES, RunConfig
from .StationSeries import StationSeries

__all__ = ["ForecastDataset", "RANK_TIE_MODES", "RunConfig", "StationSeries"]
