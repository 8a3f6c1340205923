from .config import build_run_config, read_config_file
from .ingest import export_csv, ingest_csv
from .runner import PipelineRunner
from .synthetic import TRUE_COEFFICIENTS, synthetic_dataset, synthetic_station, true_parameters

__all__ = [
    "PipelineRunner",
    "TRUE_COEFFICIENTS",
    "build_run_config",
    "export_csv",
    "ingest_csv",
    "read_config_file",
    "synthetic_dataset",
    "synthetic_station",
    "true_parameters",
]
