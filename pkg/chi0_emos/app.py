import argparse
import logging
import os
from datetime import datetime
from pathlib import Path

from chi0_emos.engine.pipeline import (
    PipelineRunner,
    build_run_config,
    export_csv,
    ingest_csv,
    read_config_file,
    synthetic_dataset,
)
from chi0_emos.engine.pipeline.config import parse_families, parse_thresholds
from chi0_emos.model.data import RunConfig
from chi0_emos.model.error.Environment import (
    EnvironmentVariableNotFoundException,
    InvalidEnvironmentVariableFormatException,
)
from chi0_emos.model.error.Pipeline import InvalidRunConfigException


class App:
    __env: dict[str, str | int | None]
    __args: argparse.Namespace

    def __setup_logging(self):
        log_dir = Path(self.__env["CHI0_EMOS_LOG_DIR"] or "logs")
        log_dir.mkdir(parents=True, exist_ok=True)
        logging.basicConfig(
            level=logging.DEBUG if self.__args.verbose else logging.INFO,
            format="[%(asctime)s] %(name)s; %(levelname)s :: %(message)s",
            handlers=[
                logging.FileHandler(
                    log_dir / f'chi0-emos-{datetime.now().strftime("%d-%m-%Y_%H-%M-%S")}.log'
                ),
                logging.StreamHandler(),
            ],
        )

    def __load_env_vars(self):
        self.__env = {}
        variables = {
            "CHI0_EMOS_THREADS": (False, int),
            "CHI0_EMOS_LOG_DIR": (False, str),
        }
        for name, var_details in variables.items():
            env_var = os.getenv(name)
            if (env_var is None) and var_details[0]:
                raise EnvironmentVariableNotFoundException(
                    f"{name} environment variable is not set."
                )
            if env_var is not None:
                try:
                    env_var = var_details[1](env_var)
                except ValueError:
                    raise InvalidEnvironmentVariableFormatException(
                        f"{name} environment variable should be {var_details[1].__name__}, but it is '{env_var}'."
                    ) from None
            self.__env[name] = env_var
        threads = self.__env["CHI0_EMOS_THREADS"]
        if threads is not None and threads < 1:
            raise InvalidEnvironmentVariableFormatException(
                f"CHI0_EMOS_THREADS environment variable should be >= 1, but it is {threads}."
            )

    @staticmethod
    def build_parser() -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog="chi0-emos",
            description="EMOS postprocessing of precipitation ensembles with the scaled Chi0 law, "
            "verified against censored shifted gamma and censored GEV benchmarks.",
        )
        parser.add_argument("-v", "--verbose", action="store_true", help="Log debug messages.")
        commands = parser.add_subparsers(dest="command", required=True)

        simulate = commands.add_parser("simulate", help="Write a synthetic station dataset.")
        simulate.add_argument("--out", type=Path, required=True, help="CSV file to write.")
        simulate.add_argument("--seed", type=int, required=True)
        simulate.add_argument("--stations", type=int, default=1)
        simulate.add_argument("--days", type=int, default=200)
        simulate.add_argument("--members", type=int, default=50)

        for name, help_text in (
            ("fit", "Train every family on the last window of each station."),
            ("predict", "Rolling forecasts with per-case predictive parameters."),
            ("verify", "Rolling forecasts, scores, decompositions, calibration tables and plots."),
        ):
            command = commands.add_parser(name, help=help_text)
            command.add_argument("--config", type=Path, help="Flat 'key = value' settings file.")
            command.add_argument("--data", type=Path, help="Input CSV station,date,obs,m1..mK.")
            command.add_argument("--out", dest="output_dir", type=Path, help="Output directory.")
            command.add_argument("--window", type=int)
            command.add_argument("--families", type=parse_families, help="Comma separated, e.g. chi0,csg0,gev0.")
            command.add_argument("--thresholds", type=parse_thresholds, help="Comma separated event thresholds in mm.")
            command.add_argument("--seed", type=int, required=name == "verify")
            command.add_argument(
                "--warm-start",
                dest="warm_start",
                action="store_const",
                const=True,
                help="Start each window from the previous optimum.",
            )
        return parser

    def __run_config(self) -> RunConfig:
        args = self.__args
        file_values = read_config_file(args.config) if args.config else {}
        overrides = {
            key: getattr(args, key)
            for key in ("data", "output_dir", "window", "families", "thresholds", "seed", "warm_start")
        }
        config = build_run_config(file_values, overrides)
        if config.data is None:
            raise InvalidRunConfigException("No input data: pass --data or set 'data' in the config file")
        return config

    def __simulate(self) -> int:
        args = self.__args
        dataset = synthetic_dataset(args.seed, args.stations, args.days, args.members)
        export_csv(dataset, args.out)
        return 0

    def __run_pipeline(self) -> int:
        config = self.__run_config()
        dataset = ingest_csv(config.data)
        runner = PipelineRunner(config, dataset, max_workers=self.__env["CHI0_EMOS_THREADS"])
        match self.__args.command:
            case "fit":
                report = runner.fit()
            case "predict":
                report = runner.predict()
            case _:
                report = runner.run()
        return report.exit_status

    def start(self, argv: list[str] | None = None) -> int:
        self.__args = self.build_parser().parse_args(argv)
        try:
            self.__load_env_vars()  # Load environment
            self.__setup_logging()  # Setup logging
            if self.__args.command == "simulate":
                return self.__simulate()
            return self.__run_pipeline()
        except Exception as e:
            logging.error(
                f"Exception occured: ({e.__class__.__name__}) {e.__str__()}",
                exc_info=True,
            )
            return 2
