"""Tables of a pipeline run, built as pandas frames in a fixed column order."""

import numpy as np
import pandas as pd

from chi0_emos.engine.scoring import brier_decomposition
from chi0_emos.engine.verification import histogram, uniformity_pvalue
from chi0_emos.model.distribution import Family
from chi0_emos.model.pipeline import CellResult, EnsembleResult
from chi0_emos.model.scoring import ScoreReport
from chi0_emos.model.verification import RankHistogram

POOLED = "ALL"
ENSEMBLE = "ensemble"

Cells = dict[tuple[str, Family], CellResult]
Ensembles = dict[str, EnsembleResult]


def threshold_label(threshold: float) -> str:
    return f"{threshold:g}"


def _dates(values) -> list[str]:
    return [str(d) for d in values]


def cases_frame(cell: CellResult, thresholds: tuple[float, ...], scored: bool = True) -> pd.DataFrame:
    """Per-case predictive parameters, scores and the coefficients behind them."""
    rows = []
    for k, prediction in enumerate(cell.predictions):
        row: dict = {"date": str(prediction.date), "obs": prediction.observation}
        row.update(prediction.distribution.parameter_row())
        row["p0"] = prediction.distribution.point_mass_at_zero()
        if scored:
            row["crps"] = float(cell.crps[k])
            row["pit"] = float(cell.pit[k])
            for threshold in thresholds:
                row[f"prob_gt_{threshold_label(threshold)}"] = float(cell.probabilities[threshold][k])
        coefficients = prediction.coefficients
        row.update(
            a=coefficients.a,
            b=coefficients.b,
            c=coefficients.c,
            d=coefficients.d,
            extra=coefficients.extra if coefficients.extra is not None else np.nan,
            converged=prediction.diagnostics.converged,
            evals=prediction.diagnostics.evals,
            train_crps=prediction.diagnostics.objective,
        )
        rows.append(row)
    return pd.DataFrame(rows)


def ensemble_cases_frame(ensemble: EnsembleResult, thresholds: tuple[float, ...]) -> pd.DataFrame:
    frame = pd.DataFrame(
        {
            "date": _dates(np.datetime_as_string(ensemble.dates, unit="D")),
            "obs": ensemble.observations,
            "f_mean": ensemble.means,
            "obs_minus_mean": ensemble.observations - ensemble.means,
            "crps": ensemble.crps,
            "rank": ensemble.ranks.astype(int),
        }
    )
    for threshold in thresholds:
        frame[f"freq_gt_{threshold_label(threshold)}"] = ensemble.frequencies[threshold]
    return frame


def _score_columns(prefix: str, scores: np.ndarray | None, case_ids) -> dict[str, float]:
    if scores is None or len(scores) == 0:
        return {f"{prefix}_mean": np.nan, f"{prefix}_max": np.nan}
    report = ScoreReport.from_scores(case_ids, scores)
    return {f"{prefix}_mean": report.mean, f"{prefix}_max": report.max}


def crps_summary_frame(
    stations: list[str],
    families: tuple[Family, ...],
    cells: Cells,
    ensembles: Ensembles,
) -> pd.DataFrame:
    """Mean and max CRPS per station and method, stations ordered by mean observation.

    The last row pools the cases of every station.
    """
    rows = []
    pooled: dict[str, list[np.ndarray]] = {f.value: [] for f in families}
    pooled[ENSEMBLE] = []
    pooled_obs = []
    for station in stations:
        ensemble = ensembles.get(station)
        row: dict = {
            "station": station,
            "mean_obs": float(np.mean(ensemble.observations)) if ensemble else np.nan,
            "n": ensemble.size if ensemble else 0,
        }
        for family in families:
            cell = cells.get((station, family))
            if cell is not None:
                row.update(_score_columns(family.value, cell.crps, [p.date for p in cell.predictions]))
                pooled[family.value].append(cell.crps)
            else:
                row.update(_score_columns(family.value, None, []))
        if ensemble is not None:
            row.update(_score_columns(ENSEMBLE, ensemble.crps, _dates(ensemble.dates)))
            pooled[ENSEMBLE].append(ensemble.crps)
            pooled_obs.append(ensemble.observations)
        else:
            row.update(_score_columns(ENSEMBLE, None, []))
        rows.append(row)

    frame = pd.DataFrame(rows).sort_values("mean_obs", kind="stable", na_position="last")
    all_obs = np.concatenate(pooled_obs) if pooled_obs else np.array([])
    total: dict = {
        "station": POOLED,
        "mean_obs": float(np.mean(all_obs)) if all_obs.size else np.nan,
        "n": int(all_obs.size),
    }
    for method, parts in pooled.items():
        scores = np.concatenate(parts) if parts else None
        total.update(_score_columns(method, scores, range(0 if scores is None else scores.size)))
    return pd.concat([frame, pd.DataFrame([total])], ignore_index=True)


def cell_parts(station: str, family: Family, stations: list[str], cells: Cells) -> list[CellResult]:
    names = stations if station == POOLED else [station]
    return [cells[(s, family)] for s in names if (s, family) in cells]


def ensemble_parts(station: str, stations: list[str], ensembles: Ensembles) -> list[EnsembleResult]:
    names = stations if station == POOLED else [station]
    return [ensembles[s] for s in names if s in ensembles]


def pooled_rank_histogram(station: str, stations: list[str], ensembles: Ensembles) -> RankHistogram | None:
    parts = ensemble_parts(station, stations, ensembles)
    if not parts:
        return None
    return RankHistogram.from_ranks(np.concatenate([e.ranks for e in parts]), parts[0].member_count)


def _brier_row(station: str, threshold: float, method: str, probs, observations) -> dict:
    outcomes = (np.asarray(observations) > threshold).astype(float)
    decomposition = brier_decomposition(probs, outcomes)
    return {
        "station": station,
        "threshold": threshold,
        "method": method,
        "n": decomposition.count,
        "n_e": decomposition.event_count,
        "brier": decomposition.mean_brier,
        "mcb": decomposition.mcb,
        "dsc": decomposition.dsc,
        "unc": decomposition.unc,
    }


def brier_summary_frame(
    stations: list[str],
    families: tuple[Family, ...],
    thresholds: tuple[float, ...],
    cells: Cells,
    ensembles: Ensembles,
) -> pd.DataFrame:
    """Mean Brier score with its CORP decomposition per station, threshold and method."""
    rows = []
    for station in stations + [POOLED]:
        for threshold in thresholds:
            for family in families:
                parts = cell_parts(station, family, stations, cells)
                if parts:
                    rows.append(
                        _brier_row(
                            station,
                            threshold,
                            family.value,
                            np.concatenate([c.probabilities[threshold] for c in parts]),
                            np.concatenate([c.observations for c in parts]),
                        )
                    )
            parts = ensemble_parts(station, stations, ensembles)
            if parts:
                rows.append(
                    _brier_row(
                        station,
                        threshold,
                        ENSEMBLE,
                        np.concatenate([e.frequencies[threshold] for e in parts]),
                        np.concatenate([e.observations for e in parts]),
                    )
                )
    return pd.DataFrame(
        rows, columns=["station", "threshold", "method", "n", "n_e", "brier", "mcb", "dsc", "unc"]
    )


def calibration_summary_frame(
    stations: list[str],
    families: tuple[Family, ...],
    pit_bins: int,
    cells: Cells,
    ensembles: Ensembles,
) -> pd.DataFrame:
    """Chi-square uniformity p-values of PIT and rank histograms."""
    rows = []
    for station in stations + [POOLED]:
        for family in families:
            values = [c.pit for c in cell_parts(station, family, stations, cells)]
            if values:
                counts = histogram(np.concatenate(values), pit_bins)
                rows.append(
                    {
                        "station": station,
                        "method": family.value,
                        "kind": "pit",
                        "bins": pit_bins,
                        "n": int(counts.sum()),
                        "chi2_pvalue": uniformity_pvalue(counts),
                    }
                )
        ranks = pooled_rank_histogram(station, stations, ensembles)
        if ranks is not None:
            rows.append(
                {
                    "station": station,
                    "method": ENSEMBLE,
                    "kind": "rank",
                    "bins": len(ranks.counts),
                    "n": ranks.total,
                    "chi2_pvalue": uniformity_pvalue(np.array(ranks.counts)),
                }
            )
    return pd.DataFrame(rows, columns=["station", "method", "kind", "bins", "n", "chi2_pvalue"])


def correlation_frame(station: str, families: tuple[Family, ...], cells: Cells, ensemble: EnsembleResult) -> pd.DataFrame:
    """Pearson correlations between the observation and the CRPS of every method."""
    columns = {"obs": ensemble.observations}
    for family in families:
        cell = cells.get((station, family))
        if cell is not None:
            columns[f"crps_{family.value}"] = cell.crps
    columns[f"crps_{ENSEMBLE}"] = ensemble.crps
    return pd.DataFrame(columns).corr()


def daily_series_frame(station: str, cells: Cells, ensemble: EnsembleResult) -> pd.DataFrame:
    """Observation, ensemble-mean error and Chi0 CRPS of a station, one row per verification day.

    Days without a Chi0 score carry NaN.
    """
    dates = _dates(np.datetime_as_string(ensemble.dates, unit="D"))
    frame = pd.DataFrame(
        {"date": dates, "obs": ensemble.observations, "obs_minus_mean": ensemble.observations - ensemble.means}
    )
    cell = cells.get((station, Family.CHI0))
    scores = {}
    if cell is not None and cell.crps is not None:
        scores = {str(p.date): float(s) for p, s in zip(cell.predictions, cell.crps)}
    frame[f"crps_{Family.CHI0.value}"] = [scores.get(d, np.nan) for d in dates]
    return frame
