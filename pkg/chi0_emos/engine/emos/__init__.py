from .climatology import climatological_fit, climatological_shift, climatology_objective
from .link import SIGMA_FLOOR, feasible, link, link_batch, link_benchmark, link_chi0, moment_match
from .rolling import DEFAULT_WINDOW, prediction_days, rolling_forecast, training_window
from .trainer import mean_crps_objective, train_window

__all__ = [
    "DEFAULT_WINDOW",
    "SIGMA_FLOOR",
    "climatological_fit",
    "climatological_shift",
    "climatology_objective",
    "feasible",
    "link",
    "link_batch",
    "link_benchmark",
    "link_chi0",
    "mean_crps_objective",
    "moment_match",
    "prediction_days",
    "rolling_forecast",
    "train_window",
    "training_window",
]
