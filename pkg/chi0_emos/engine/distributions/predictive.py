from dataclasses import dataclass

import numpy as np
from scipy import stats

from chi0_emos.engine.distributions import benchmarks, chi0
from chi0_emos.model.distribution import Chi0Params, Csg0Params, Family, Gev0Params
from chi0_emos.model.error.Distribution import InvalidParameterException

_PARAMS_TYPE = {Family.CHI0: Chi0Params, Family.CSG0: Csg0Params, Family.GEV0: Gev0Params}


@dataclass(frozen=True)
class PredictiveDistribution:
    """A predictive law from one of the three families, ready to be scored and verified.

    Attributes:
      - family (Family): Variant tag.
      - params (Chi0Params | Csg0Params | Gev0Params): Parameter record of the family.
    """

    family: Family
    params: Chi0Params | Csg0Params | Gev0Params

    def __post_init__(self):
        if not isinstance(self.params, _PARAMS_TYPE[self.family]):
            raise InvalidParameterException(
                f"{self.family.value} distribution needs {_PARAMS_TYPE[self.family].__name__}, "
                f"got {type(self.params).__name__}"
            )

    @classmethod
    def chi0(cls, lam: float, sigma: float) -> "PredictiveDistribution":
        return cls(Family.CHI0, Chi0Params(lam=lam, sigma=sigma))

    @classmethod
    def csg0(cls, shape: float, scale: float, shift: float = 0.0) -> "PredictiveDistribution":
        return cls(Family.CSG0, Csg0Params(shape=shape, scale=scale, shift=shift))

    @classmethod
    def gev0(cls, location: float, scale: float, shape: float = 0.0) -> "PredictiveDistribution":
        return cls(Family.GEV0, Gev0Params(location=location, scale=scale, shape=shape))

    def cdf(self, x):
        match self.family:
            case Family.CHI0:
                return chi0.chi0_cdf(x, self.params)
            case Family.CSG0:
                return benchmarks.csg0_cdf(x, self.params)
            case Family.GEV0:
                return benchmarks.gev0_cdf(x, self.params)

    def quantile(self, p: float) -> float:
        match self.family:
            case Family.CHI0:
                return chi0.chi0_quantile(p, self.params)
            case Family.CSG0:
                return benchmarks.csg0_quantile(p, self.params)
            case Family.GEV0:
                return benchmarks.gev0_quantile(p, self.params)

    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        match self.family:
            case Family.CHI0:
                return chi0.chi0_sample(self.params, rng, n)
            case Family.CSG0:
                return benchmarks.csg0_sample(self.params, rng, n)
            case Family.GEV0:
                return benchmarks.gev0_sample(self.params, rng, n)

    def moments(self) -> tuple[float, float]:
        match self.family:
            case Family.CHI0:
                return chi0.chi0_moments(self.params)
            case Family.CSG0:
                return benchmarks.csg0_moments(self.params)
            case Family.GEV0:
                return benchmarks.gev0_moments(self.params)

    def point_mass_at_zero(self) -> float:
        return float(self.cdf(0.0))

    def parameter_row(self) -> dict[str, float]:
        return dict(self.params.__dict__)


def point_mass_at_zero(dist: PredictiveDistribution) -> float:
    """Probability of an exact zero; equals the CDF at 0."""
    return dist.point_mass_at_zero()


@dataclass(frozen=True)
class DistributionBatch:
    """Parameter arrays of many distributions of one family, evaluated together.

    Parameter order per family: chi0 (lam, sigma), csg0 (shape, scale, shift),
    gev0 (location, scale, shape).

    Attributes:
      - family (Family): Common family of the batch.
      - params (tuple[numpy.ndarray, ...]): One array per parameter, equal lengths.
    """

    family: Family
    params: tuple[np.ndarray, ...]

    @property
    def size(self) -> int:
        return int(self.params[0].size)

    @classmethod
    def from_distributions(cls, dists: list[PredictiveDistribution]) -> "DistributionBatch":
        if not dists:
            raise ValueError("Cannot build a batch from no distributions")
        family = dists[0].family
        if any(d.family != family for d in dists):
            raise ValueError("All distributions of a batch must share one family")
        names = list(dists[0].params.__dict__)
        return cls(
            family,
            tuple(np.array([getattr(d.params, name) for d in dists], dtype=float) for name in names),
        )

    def distribution(self, index: int) -> PredictiveDistribution:
        values = [float(p[index]) for p in self.params]
        return PredictiveDistribution(self.family, _PARAMS_TYPE[self.family](*values))

    def _select(self, owner):
        if owner is None:
            return self.params
        return tuple(p[owner] for p in self.params)

    def cdf(self, x, owner=None) -> np.ndarray:
        params = self._select(owner)
        match self.family:
            case Family.CHI0:
                return chi0.chi0_cdf_array(x, *params)
            case Family.CSG0:
                return benchmarks.csg0_cdf_array(x, *params)
            case Family.GEV0:
                return benchmarks.gev0_cdf_array(x, *params)

    def survival(self, x, owner=None) -> np.ndarray:
        params = self._select(owner)
        match self.family:
            case Family.CHI0:
                return 1.0 - chi0.chi0_cdf_array(x, *params)
            case Family.CSG0:
                return benchmarks.csg0_survival_array(x, *params)
            case Family.GEV0:
                return benchmarks.gev0_survival_array(x, *params)

    def tail_point(self, probability: float) -> np.ndarray:
        """Points beyond which each survival function is below `probability`."""
        match self.family:
            case Family.CHI0:
                lam, sigma = self.params
                point = chi0.chi0_quantile_array(1.0 - probability, lam, sigma)
            case Family.CSG0:
                shape, scale, shift = self.params
                point = stats.gamma.isf(probability, a=shape, scale=scale) - shift
            case Family.GEV0:
                location, scale, shape = self.params
                point = stats.genextreme.isf(probability, -shape, loc=location, scale=scale)
        return np.maximum(np.asarray(point, dtype=float), 0.0)

    def positive_mean_bound(self) -> np.ndarray:
        """Upper bound on E[max(X, 0)] per distribution."""
        match self.family:
            case Family.CHI0:
                lam, sigma = self.params
                return sigma * lam
            case Family.CSG0:
                shape, scale, _ = self.params
                return shape * scale
            case Family.GEV0:
                return benchmarks.gev0_abs_mean_bound(*self.params)
