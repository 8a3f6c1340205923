from dataclasses import dataclass

from chi0_emos.model.data.StationSeries import StationSeries
from chi0_emos.model.error.Dataset import DatasetFormatException


@dataclass(frozen=True)
class ForecastDataset:
    """Observations paired with ensemble forecasts for a set of stations.

    Attributes:
      - stations (tuple[StationSeries, ...]): Per-station series in file order.
      - member_count (int): Ensemble size m shared by every row.
    """

    stations: tuple[StationSeries, ...]
    member_count: int

    def __post_init__(self):
        names = [s.station for s in self.stations]
        if len(set(names)) != len(names):
            raise DatasetFormatException("Station identifiers must be unique")
        for series in self.stations:
            if series.member_count != self.member_count:
                raise DatasetFormatException(
                    f"Station {series.station} has {series.member_count} members, expected {self.member_count}"
                )

    @property
    def station_names(self) -> list[str]:
        return [s.station for s in self.stations]

    def station(self, name: str) -> StationSeries:
        for series in self.stations:
            if series.station == name:
                return series
        raise KeyError(f"Unknown station '{name}'")
