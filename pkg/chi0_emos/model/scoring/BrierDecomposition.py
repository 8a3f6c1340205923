from dataclasses import dataclass


@dataclass(frozen=True)
class BrierDecomposition:
    """Mean Brier score split into miscalibration, discrimination and uncertainty.

    mean_brier = mcb - dsc + unc.

    Attributes:
      - mean_brier (float): Mean Brier score of the forecasts.
      - mcb (float): Miscalibration, >= 0 (smaller is better).
      - dsc (float): Discrimination, >= 0 (larger is better).
      - unc (float): Uncertainty r(1 - r) of the event base rate r, in [0, 0.25].
      - event_count (int): Number of observed events.
      - count (int): Number of forecast cases.
    """

    mean_brier: float
    mcb: float
    dsc: float
    unc: float
    event_count: int = 0
    count: int = 0
