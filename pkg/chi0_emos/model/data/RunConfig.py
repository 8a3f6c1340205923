from dataclasses import dataclass
from pathlib import Path

from chi0_emos.model.distribution import Family
from chi0_emos.model.error.Pipeline import InvalidRunConfigException
from chi0_emos.model.numerics import QuadratureSpec

RANK_TIE_MODES = ("random", "mid")


@dataclass(frozen=True)
class RunConfig:
    """Settings of a postprocessing run.

    Attributes:
      - data (Path | None): Input CSV.
      - output_dir (Path): Directory receiving tables and plots (Default is "output").
      - window (int): Rolling training window in days (Default is 30).
      - families (tuple[Family, ...]): Families to fit (Default is all three).
      - thresholds (tuple[float, ...]): Event thresholds in mm (Default is 5, 10, 20, 30).
      - seed (int | None): Master seed of the randomised diagnostics.
      - warm_start (bool): Start each window from the previous optimum (Default is False).
      - abs_tol (float): Quadrature absolute tolerance (Default is 1e-9).
      - rel_tol (float): Quadrature relative tolerance (Default is 1e-8).
      - max_subdivisions (int): Quadrature subdivision budget (Default is 200).
      - pit_bins (int): PIT histogram bins (Default is 20).
      - rank_ties (str): "random" or "mid" tie handling of verification ranks.
      - threads (int | None): Worker cap; None defers to CHI0_EMOS_THREADS or the CPU count.
    """

    data: Path | None = None
    output_dir: Path = Path("output")
    window: int = 30
    families: tuple[Family, ...] = (Family.CHI0, Family.CSG0, Family.GEV0)
    thresholds: tuple[float, ...] = (5.0, 10.0, 20.0, 30.0)
    seed: int | None = None
    warm_start: bool = False
    abs_tol: float = 1e-9
    rel_tol: float = 1e-8
    max_subdivisions: int = 200
    pit_bins: int = 20
    rank_ties: str = "random"
    threads: int | None = None

    def __post_init__(self):
        if self.window < 2:
            raise InvalidRunConfigException(f"window must be >= 2, got {self.window}")
        if not self.families:
            raise InvalidRunConfigException("At least one family is required")
        if len(set(self.families)) != len(self.families):
            raise InvalidRunConfigException("Families must not repeat")
        if any(t <= 0.0 for t in self.thresholds):
            raise InvalidRunConfigException("Thresholds must be positive")
        if any(b <= a for a, b in zip(self.thresholds, self.thresholds[1:])):
            raise InvalidRunConfigException("Thresholds must be strictly ascending")
        if self.seed is not None and self.seed < 0:
            raise InvalidRunConfigException(f"seed must be >= 0, got {self.seed}")
        if self.pit_bins < 1:
            raise InvalidRunConfigException(f"pit_bins must be >= 1, got {self.pit_bins}")
        if self.rank_ties not in RANK_TIE_MODES:
            raise InvalidRunConfigException(f"rank_ties must be one of {RANK_TIE_MODES}")
        if self.threads is not None and self.threads < 1:
            raise InvalidRunConfigException(f"threads must be >= 1, got {self.threads}")
        try:
            self.quadrature_spec()
        except ValueError as e:
            raise InvalidRunConfigException(str(e)) from e

    def quadrature_spec(self) -> QuadratureSpec:
        return QuadratureSpec(
            abs_tol=self.abs_tol,
            rel_tol=self.rel_tol,
            max_subdivisions=self.max_subdivisions,
        )
