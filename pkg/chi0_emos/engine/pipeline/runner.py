import json
import logging
import os
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import asdict
from itertools import combinations
from pathlib import Path
from typing import Callable, TypeVar

import numpy as np
import pandas as pd

from chi0_emos.engine.distributions import DistributionBatch
from chi0_emos.engine.emos import prediction_days, rolling_forecast, train_window, training_window
from chi0_emos.engine.optimizer import DEFAULT_CONFIG
from chi0_emos.engine.pipeline import tables
from chi0_emos.engine.plots import write_svg
from chi0_emos.engine.scoring import crps_batch, crps_ensemble_array, ensemble_event_frequency, event_probability_batch
from chi0_emos.engine.verification import histogram, pit_batch, reliability_diagram, verification_ranks
from chi0_emos.model.data import ForecastDataset, RunConfig, StationSeries
from chi0_emos.model.distribution import Family
from chi0_emos.model.emos import EmosCoefficients
from chi0_emos.model.error.Emos import InsufficientDataException
from chi0_emos.model.error.Numerics import QuadratureConvergenceException
from chi0_emos.model.error.Pipeline import InvalidRunConfigException
from chi0_emos.model.numerics import QuadratureSpec
from chi0_emos.model.pipeline import CellFailure, CellResult, EnsembleResult, PipelineReport
from chi0_emos.model.plot import BarChart, ReliabilityPlot, ScatterPlot, TimeSeriesPlot
from chi0_emos.utils.checksum import write_checksum_manifest
from chi0_emos.utils.seeding import stream_generator

T = TypeVar("T")

SUMMARY_DECIMALS = "%.4f"


class PipelineRunner:
    """Runs rolling EMOS over every station and family of a dataset and writes the artifacts.

    Station/family cells run on a thread pool. A failing cell is logged and recorded
    in `failures.json`; the other cells still complete. Tables are merged and written
    after every cell has finished, in dataset order, so identical inputs and seed give
    byte-identical tables.
    """

    __config: RunConfig
    __dataset: ForecastDataset
    __max_workers: int
    __spec: QuadratureSpec
    __report: PipelineReport

    def __init__(self, config: RunConfig, dataset: ForecastDataset, max_workers: int | None = None):
        self.__config = config
        self.__dataset = dataset
        self.__max_workers = config.threads or max_workers or os.cpu_count() or 1
        self.__spec = config.quadrature_spec()
        self.__report = PipelineReport(output_dir=Path(config.output_dir))

    @property
    def report(self) -> PipelineReport:
        return self.__report

    def fit(self) -> PipelineReport:
        """Train every family on the last window of every station; writes `coefficients.csv`."""
        self.__reset()
        fitted = self.__run_cells(self.__fit_cell)
        rows = [fitted[key] for key in self.__cell_keys() if key in fitted]
        self.__write_csv(pd.DataFrame(rows), "coefficients.csv")
        self.__finish("fit")
        return self.__report

    def predict(self) -> PipelineReport:
        """Rolling forecasts; per-case files carry the predictive parameters only."""
        self.__reset()
        cells = self.__run_cells(lambda series, family: self.__forecast_cell(series, family, scored=False))
        for key in self.__cell_keys():
            if key in cells:
                self.__write_csv(tables.cases_frame(cells[key], self.__config.thresholds, scored=False), self.__cases_name(*key))
        self.__finish("predict")
        return self.__report

    def run(self) -> PipelineReport:
        """Full verification run: forecasts, scores, decompositions, calibration and plots.

        Raises:
            InvalidRunConfigException: If no master seed is configured.
        """
        if self.__config.seed is None:
            raise InvalidRunConfigException("A seed is required for runs with randomized PIT and rank output")
        self.__reset()
        cells = self.__run_cells(lambda series, family: self.__forecast_cell(series, family, scored=True))
        ensembles = self.__ensembles()
        self.__write_tables(cells, ensembles)
        self.__write_plots(cells, ensembles)
        self.__finish("verify")
        return self.__report

    def __reset(self):
        self.__report = PipelineReport(output_dir=Path(self.__config.output_dir))
        self.__report.output_dir.mkdir(parents=True, exist_ok=True)

    def __cell_keys(self) -> list[tuple[str, Family]]:
        return [(s, f) for s in self.__dataset.station_names for f in self.__config.families]

    def __run_cells(self, work: Callable[[StationSeries, Family], T]) -> dict[tuple[str, Family], T]:
        keys = self.__cell_keys()
        self.__report.cells = len(keys)
        workers = max(1, min(len(keys), self.__max_workers))
        logging.info(f"Running {len(keys)} station/family cell(s) on {workers} worker(s)")
        results: dict[tuple[str, Family], T] = {}
        failures: dict[tuple[str, Family], CellFailure] = {}
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = {
                pool.submit(work, self.__dataset.station(station), family): (station, family)
                for station, family in keys
            }
            for future in as_completed(futures):
                station, family = futures[future]
                try:
                    results[(station, family)] = future.result()
                    logging.info(f"Cell {station}/{family.value} done")
                except Exception as e:
                    logging.error(
                        f"Cell {station}/{family.value} failed: ({e.__class__.__name__}) {e.__str__()}",
                        exc_info=True,
                    )
                    failures[(station, family)] = CellFailure.from_exception(station, family.value, e)
        self.__report.failures.extend(failures[key] for key in keys if key in failures)
        return results

    def __fit_cell(self, series: StationSeries, family: Family) -> dict:
        window_size = self.__config.window
        if series.consecutive_run()[-1] < window_size:
            raise InsufficientDataException(
                f"Station {series.station} does not end with {window_size} consecutive days"
            )
        window = training_window(series, series.size, window_size)
        coefficients, diagnostics = train_window(window, family, None, DEFAULT_CONFIG, self.__spec)
        return {
            "station": series.station,
            "family": family.value,
            "window_end": str(series.dates[-1]),
            "a": coefficients.a,
            "b": coefficients.b,
            "c": coefficients.c,
            "d": coefficients.d,
            "extra": coefficients.extra if coefficients.extra is not None else np.nan,
            "converged": diagnostics.converged,
            "evals": diagnostics.evals,
            "train_crps": diagnostics.objective,
        }

    def __forecast_cell(self, series: StationSeries, family: Family, scored: bool) -> CellResult:
        config = self.__config
        predictions = rolling_forecast(series, family, config.window, config.warm_start, DEFAULT_CONFIG, self.__spec)
        if not scored:
            return CellResult(station=series.station, family=family, predictions=predictions)

        batch = DistributionBatch.from_distributions([p.distribution for p in predictions])
        observations = np.array([p.observation for p in predictions], dtype=float)
        crps, errors, converged = crps_batch(batch, observations, self.__spec)
        if not converged.all():
            failed = int(np.flatnonzero(~converged)[0])
            raise QuadratureConvergenceException(
                f"CRPS of {int((~converged).sum())} case(s) did not converge, first on {predictions[failed].date}",
                float(crps[failed]),
                float(errors[failed]),
            )
        rng = stream_generator(config.seed, series.station, family.value)
        return CellResult(
            station=series.station,
            family=family,
            predictions=predictions,
            crps=crps,
            pit=pit_batch(batch, observations, rng),
            probabilities={t: event_probability_batch(batch, t) for t in config.thresholds},
        )

    def __ensembles(self) -> dict[str, EnsembleResult]:
        config = self.__config
        ensembles = {}
        for series in self.__dataset.stations:
            try:
                days = prediction_days(series, config.window)
                if days.size == 0:
                    raise InsufficientDataException(
                        f"Station {series.station} has no run of {config.window + 1} consecutive days"
                    )
                members = series.members[days]
                observations = series.observations[days]
                rng = stream_generator(config.seed, series.station, tables.ENSEMBLE)
                ensembles[series.station] = EnsembleResult(
                    station=series.station,
                    dates=series.dates[days],
                    observations=observations,
                    means=members.mean(axis=1),
                    crps=crps_ensemble_array(members, observations),
                    ranks=verification_ranks(members, observations, rng, config.rank_ties),
                    member_count=series.member_count,
                    frequencies={t: ensemble_event_frequency(members, t) for t in config.thresholds},
                )
            except Exception as e:
                logging.error(
                    f"Ensemble diagnostics of {series.station} failed: ({e.__class__.__name__}) {e.__str__()}",
                    exc_info=True,
                )
                self.__report.failures.append(CellFailure.from_exception(series.station, tables.ENSEMBLE, e))
        return ensembles

    def __write_tables(self, cells: tables.Cells, ensembles: tables.Ensembles):
        config = self.__config
        stations = self.__dataset.station_names
        for key in self.__cell_keys():
            if key in cells:
                self.__write_csv(tables.cases_frame(cells[key], config.thresholds), self.__cases_name(*key))
        for station in stations:
            if station in ensembles:
                self.__write_csv(
                    tables.ensemble_cases_frame(ensembles[station], config.thresholds),
                    f"cases_{station}_{tables.ENSEMBLE}.csv",
                )
                self.__write_csv(
                    tables.correlation_frame(station, config.families, cells, ensembles[station]),
                    f"correlation_{station}.csv",
                    index_label="variable",
                )

        crps = tables.crps_summary_frame(stations, config.families, cells, ensembles)
        self.__write_csv(crps, "summary_crps.csv", float_format=SUMMARY_DECIMALS)
        self.__write_csv(crps, "summary_crps_full.csv")
        self.__write_csv(
            tables.brier_summary_frame(stations, config.families, config.thresholds, cells, ensembles),
            "summary_brier.csv",
            float_format=SUMMARY_DECIMALS,
        )
        self.__write_csv(
            tables.calibration_summary_frame(stations, config.families, config.pit_bins, cells, ensembles),
            "summary_calibration.csv",
            float_format=SUMMARY_DECIMALS,
        )

    def __write_plots(self, cells: tables.Cells, ensembles: tables.Ensembles):
        config = self.__config
        stations = self.__dataset.station_names
        plots = self.__report.output_dir / "plots"
        pit_labels = tuple(f"{(k + 1) / config.pit_bins:.2f}" for k in range(config.pit_bins))

        for station in stations + [tables.POOLED]:
            for family in config.families:
                parts = tables.cell_parts(station, family, stations, cells)
                if not parts:
                    continue
                pit = np.concatenate([c.pit for c in parts])
                self.__plot(
                    BarChart(
                        title=f"PIT {family.value} {station}",
                        counts=tuple(int(c) for c in histogram(pit, config.pit_bins)),
                        labels=pit_labels,
                        x_label="PIT",
                    ),
                    plots / f"pit_{station}_{family.value}.svg",
                )
                observations = np.concatenate([c.observations for c in parts])
                for threshold in config.thresholds:
                    diagram = reliability_diagram(
                        np.concatenate([c.probabilities[threshold] for c in parts]),
                        (observations > threshold).astype(float),
                    )
                    self.__plot(
                        ReliabilityPlot(title=f"{family.value} {station} > {tables.threshold_label(threshold)} mm", diagram=diagram),
                        plots / f"reliability_{station}_{family.value}_{tables.threshold_label(threshold)}.svg",
                    )
            ranks = tables.pooled_rank_histogram(station, stations, ensembles)
            if ranks is not None:
                self.__plot(
                    BarChart(
                        title=f"Verification rank {station}",
                        counts=ranks.counts,
                        labels=tuple(str(r) for r in range(1, ranks.member_count + 2)),
                        x_label="rank",
                    ),
                    plots / f"rank_{station}.svg",
                )

        for station in stations:
            if station in ensembles:
                daily = tables.daily_series_frame(station, cells, ensembles[station])
                self.__plot(
                    TimeSeriesPlot(
                        title=f"Daily series {station}",
                        dates=tuple(daily["date"]),
                        series=tuple((name, tuple(daily[name].tolist())) for name in daily.columns[1:]),
                    ),
                    plots / f"timeseries_{station}.svg",
                )
            scored = [f for f in config.families if (station, f) in cells]
            for first, second in combinations(scored, 2):
                self.__plot(
                    ScatterPlot(
                        title=f"CRPS {station}",
                        x=tuple(cells[(station, first)].crps.tolist()),
                        y=tuple(cells[(station, second)].crps.tolist()),
                        x_label=f"CRPS {first.value}",
                        y_label=f"CRPS {second.value}",
                    ),
                    plots / f"scatter_{station}_{first.value}_{second.value}.svg",
                )

    def __plot(self, plot, path: Path):
        self.__report.files.append(write_svg(plot, path))

    def __cases_name(self, station: str, family: Family) -> str:
        return f"cases_{station}_{family.value}.csv"

    def __write_csv(self, frame: pd.DataFrame, name: str, index_label: str | None = None, **options) -> Path:
        path = self.__report.output_dir / name
        frame.to_csv(path, index=index_label is not None, index_label=index_label, lineterminator="\n", **options)
        self.__report.files.append(path)
        logging.info(f"Wrote {path}")
        return path

    def __finish(self, mode: str):
        output_dir = self.__report.output_dir
        config = self.__config
        metadata = {
            "mode": mode,
            "stations": self.__dataset.station_names,
            "member_count": self.__dataset.member_count,
            "window": config.window,
            "families": [f.value for f in config.families],
            "thresholds": list(config.thresholds),
            "seed": config.seed,
            "warm_start": config.warm_start,
            "quadrature": asdict(self.__spec),
            "pit_bins": config.pit_bins,
            "rank_ties": config.rank_ties,
            "start_coefficients": {f.value: asdict(EmosCoefficients.default_start(f)) for f in config.families},
            "benchmark_extra": {
                "csg0": "shift fitted once per station by a climatological CSG0 fit to the first training window",
                "gev0": "shape fitted per window together with a, b, c, d",
            },
            "cells": self.__report.cells,
            "failed_cells": len(self.__report.failures),
        }
        self.__write_json(metadata, "metadata.json")
        self.__write_json([f.to_record() for f in self.__report.failures], "failures.json")
        tables_written = [p for p in self.__report.files if p.suffix == ".csv"]
        if tables_written:
            manifest = write_checksum_manifest(tables_written, output_dir / "checksums.sha256", output_dir)
            self.__report.files.append(manifest)
        if self.__report.failures:
            logging.warning(f"{len(self.__report.failures)} cell(s) failed, see {output_dir / 'failures.json'}")
        logging.info(f"{mode} finished: {len(self.__report.files)} file(s) in {output_dir}")

    def __write_json(self, payload, name: str):
        path = self.__report.output_dir / name
        with open(path, "w", encoding="utf-8") as json_file:
            json.dump(payload, json_file, indent=2, default=str)
            json_file.write("\n")
        self.__report.files.append(path)
