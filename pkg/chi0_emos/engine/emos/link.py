"""Links from ensemble statistics to distribution parameters.

Chi0: lam = a^2 + b^2 * mean, sigma = c^2 + d^2 * sd. When every member is zero
both statistics vanish and the link reduces to (a^2, c^2) without any indicator.

The benchmark families use the same two linear predictors as the mean and the
standard deviation of the uncensored law and moment-match their own parameters.
"""

import numpy as np

from chi0_emos.engine.distributions import DistributionBatch, PredictiveDistribution, gev_standard_moments
from chi0_emos.model.distribution import GEV0_SHAPE_UPPER, Chi0Params, Csg0Params, Family, Gev0Params
from chi0_emos.model.emos import EmosCoefficients, EnsembleForecast
from chi0_emos.model.error.Emos import MomentMatchingException

SIGMA_FLOOR = 1e-8


def linear_predictors(vector, means, sds) -> tuple[np.ndarray, np.ndarray]:
    """(a^2 + b^2 * mean, max(c^2 + d^2 * sd, floor)) for arrays of ensemble statistics."""
    a, b, c, d = (float(v) for v in vector[:4])
    means = np.asarray(means, dtype=float)
    sds = np.asarray(sds, dtype=float)
    # a zero statistic contributes nothing, even when the squared slope overflows
    with np.errstate(over="ignore", invalid="ignore"):
        first = a * a + np.where(means > 0.0, b * b * means, 0.0)
        second = np.maximum(c * c + np.where(sds > 0.0, d * d * sds, 0.0), SIGMA_FLOOR)
    return first, second


def moment_match(family: Family, mean, sd, extra: float) -> tuple[np.ndarray, ...]:
    """Benchmark parameters whose uncensored law has the given mean and sd.

    Raises:
        MomentMatchingException: If a mean is not positive.
    """
    mean = np.asarray(mean, dtype=float)
    sd = np.asarray(sd, dtype=float)
    if np.any(mean <= 0.0):
        raise MomentMatchingException("Linked mean must be > 0 to moment-match a benchmark law")
    match family:
        case Family.CSG0:
            return mean**2 / sd**2, sd**2 / mean, np.full(mean.shape, float(extra))
        case Family.GEV0:
            z_mean, z_variance = gev_standard_moments(extra)
            scale = sd / np.sqrt(z_variance)
            return mean - scale * z_mean, scale, np.full(mean.shape, float(extra))
    raise ValueError(f"{family.value} is not a benchmark family")


def link_chi0(coeffs: EmosCoefficients, forecast: EnsembleForecast) -> Chi0Params:
    lam, sigma = linear_predictors(coeffs.to_vector(), forecast.mean, forecast.sd)
    return Chi0Params(lam=float(lam), sigma=float(sigma))


def link_benchmark(coeffs: EmosCoefficients, forecast: EnsembleForecast) -> Csg0Params | Gev0Params:
    mean, sd = linear_predictors(coeffs.to_vector(), forecast.mean, forecast.sd)
    params = [float(p) for p in moment_match(coeffs.family, mean, sd, coeffs.extra)]
    if coeffs.family == Family.CSG0:
        return Csg0Params(*params)
    return Gev0Params(*params)


def link(coeffs: EmosCoefficients, forecast: EnsembleForecast) -> PredictiveDistribution:
    """Predictive distribution of a forecast case under the trained coefficients."""
    if coeffs.family == Family.CHI0:
        return PredictiveDistribution(Family.CHI0, link_chi0(coeffs, forecast))
    return PredictiveDistribution(coeffs.family, link_benchmark(coeffs, forecast))


def feasible(vector, family: Family) -> bool:
    """Whether a raw optimizer vector satisfies the family constraints."""
    vector = np.asarray(vector, dtype=float)
    if not np.all(np.isfinite(vector)):
        return False
    match family:
        case Family.CSG0:
            return bool(vector[4] >= 0.0)
        case Family.GEV0:
            return bool(0.0 <= vector[4] < GEV0_SHAPE_UPPER)
    return True


def link_batch(vector, means, sds, family: Family) -> DistributionBatch:
    """Distributions of a whole window at once, from a raw optimizer vector."""
    first, second = linear_predictors(vector, means, sds)
    if family == Family.CHI0:
        return DistributionBatch(family, (first, second))
    return DistributionBatch(family, moment_match(family, first, second, float(vector[4])))
