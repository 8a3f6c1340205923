import logging
import re
from pathlib import Path

import numpy as np
import pandas as pd

from chi0_emos.model.data import ForecastDataset, StationSeries
from chi0_emos.model.error.Dataset import DatasetFormatException, EmptyInputException

KEY_COLUMNS = ["station", "date", "obs"]
MEMBER_COLUMN = re.compile(r"^m(\d+)$")
# header is line 1, so the first data row is line 2
FIRST_DATA_LINE = 2
# markers R and pandas write for a missing value
MISSING_MARKERS = ["", "NA", "NaN", "nan"]


def member_columns(count: int) -> list[str]:
    return [f"m{k}" for k in range(1, count + 1)]


def _check_header(columns: list[str]) -> int:
    if columns[:3] != KEY_COLUMNS:
        raise DatasetFormatException(
            f"Header must start with {','.join(KEY_COLUMNS)}, got {','.join(columns[:3])}", row=1
        )
    members = columns[3:]
    if not members:
        raise DatasetFormatException("Header has no member columns m1..mK", row=1)
    if members != member_columns(len(members)):
        raise DatasetFormatException(
            f"Member columns must be m1..m{len(members)} in order, got {','.join(members)}", row=1
        )
    return len(members)


def _first_row(mask: pd.Series) -> int:
    return int(mask.index[mask.to_numpy()][0]) + FIRST_DATA_LINE


def ingest_csv(path) -> ForecastDataset:
    """Read a `station,date,obs,m1..mK` file into a dataset.

    Rows with an empty field, or an NA or NaN marker, are dropped and counted in a
    warning. Values are parsed at full precision. Stations keep the order of their first appearance.

    Raises:
        DatasetFormatException: On a malformed header, an unparsable date or number,
            a negative value or dates that do not increase within a station. The
            message carries the file line number.
        EmptyInputException: If no complete row remains.
    """
    path = Path(path)
    frame = pd.read_csv(path, dtype=str, keep_default_na=False, skipinitialspace=True)
    frame.columns = [c.strip() for c in frame.columns]
    member_count = _check_header(list(frame.columns))
    frame = frame.apply(lambda column: column.str.strip())

    incomplete = (
        frame.isna().any(axis=1)
        | (frame["station"] == "")
        | frame.drop(columns="station").isin(MISSING_MARKERS).any(axis=1)
    )
    if incomplete.any():
        logging.warning(f"{path.name}: dropped {int(incomplete.sum())} row(s) with missing fields")
    frame = frame.loc[~incomplete]
    if frame.empty:
        raise EmptyInputException(f"{path.name} has no complete rows")

    dates = pd.to_datetime(frame["date"], format="%Y-%m-%d", errors="coerce")
    if dates.isna().any():
        row = _first_row(dates.isna())
        raise DatasetFormatException(f"date '{frame.loc[row - FIRST_DATA_LINE, 'date']}' is not ISO-8601", row=row)

    value_columns = ["obs"] + member_columns(member_count)
    values = frame[value_columns].apply(pd.to_numeric, errors="coerce")
    unparsable = values.isna().any(axis=1) | ~np.isfinite(values).all(axis=1)
    if unparsable.any():
        raise DatasetFormatException("value is not a finite number", row=_first_row(unparsable))
    # Python's float() parses with correct rounding
    values = frame[value_columns].astype(float)
    negative = (values < 0.0).any(axis=1)
    if negative.any():
        raise DatasetFormatException("values must be >= 0", row=_first_row(negative))

    stations = []
    for station, rows in frame.groupby("station", sort=False):
        station_dates = dates.loc[rows.index]
        decreasing = station_dates.diff() <= pd.Timedelta(0)
        if decreasing.any():
            raise DatasetFormatException(
                f"dates of station {station} are not strictly increasing", row=_first_row(decreasing)
            )
        stations.append(
            StationSeries(
                station=str(station),
                dates=station_dates.to_numpy().astype("datetime64[D]"),
                observations=values.loc[rows.index, "obs"].to_numpy(dtype=float),
                members=values.loc[rows.index, member_columns(member_count)].to_numpy(dtype=float),
            )
        )
    dataset = ForecastDataset(stations=tuple(stations), member_count=member_count)
    logging.info(
        f"{path.name}: {len(frame)} rows, {len(stations)} station(s), {member_count} members"
    )
    return dataset


def dataset_frame(dataset: ForecastDataset) -> pd.DataFrame:
    frames = []
    for series in dataset.stations:
        frame = pd.DataFrame(series.members, columns=member_columns(dataset.member_count))
        frame.insert(0, "obs", series.observations)
        frame.insert(0, "date", np.datetime_as_string(series.dates, unit="D"))
        frame.insert(0, "station", series.station)
        frames.append(frame)
    return pd.concat(frames, ignore_index=True)


def export_csv(dataset: ForecastDataset, path) -> Path:
    """Write a dataset in the ingest format; floats keep their shortest round-trip form."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    dataset_frame(dataset).to_csv(path, index=False)
    logging.info(f"Wrote {path}")
    return path
