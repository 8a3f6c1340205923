"""Censored benchmark families: shifted gamma and generalized extreme value.

Both are continuous laws on the real line whose mass below zero is collapsed onto
an atom at zero. scipy's `genextreme` uses the shape convention c = -xi.
"""

import math

import numpy as np
from scipy import special, stats

from chi0_emos.engine.numerics import integrate
from chi0_emos.model.distribution import Csg0Params, Gev0Params
from chi0_emos.model.error.Distribution import DomainException

EULER_GAMMA = 0.5772156649015329
# below this |xi| the Gumbel limits are used
GUMBEL_TOLERANCE = 1e-6


def _check_point(x):
    x = np.asarray(x, dtype=float)
    if np.any(np.isnan(x)) or np.any(x < 0.0):
        raise DomainException(f"CDF is defined on x >= 0 only, got {x}")
    return x


def _check_probability(p: float) -> float:
    if not (0.0 <= p < 1.0):
        raise DomainException(f"Quantile level must lie in [0, 1), got {p}")
    return float(p)


def _scalar(value):
    value = np.asarray(value)
    return float(value) if value.ndim == 0 else value


# --- censored, shifted gamma -------------------------------------------------


def csg0_cdf_array(x, shape, scale, shift) -> np.ndarray:
    return stats.gamma.cdf(np.asarray(x, dtype=float) + shift, a=shape, scale=scale)


def csg0_survival_array(x, shape, scale, shift) -> np.ndarray:
    return stats.gamma.sf(np.asarray(x, dtype=float) + shift, a=shape, scale=scale)


def csg0_cdf(x, params: Csg0Params):
    """GammaCDF(x + shift; shape, scale) for x >= 0."""
    x = _check_point(x)
    return _scalar(csg0_cdf_array(x, params.shape, params.scale, params.shift))


def csg0_quantile(p: float, params: Csg0Params) -> float:
    p = _check_probability(p)
    if p <= float(csg0_cdf_array(0.0, params.shape, params.scale, params.shift)):
        return 0.0
    return max(float(stats.gamma.ppf(p, a=params.shape, scale=params.scale)) - params.shift, 0.0)


def csg0_sample(params: Csg0Params, rng: np.random.Generator, n: int) -> np.ndarray:
    if n < 0:
        raise ValueError(f"Sample size must be >= 0, got {n}")
    return np.maximum(rng.gamma(params.shape, params.scale, size=n) - params.shift, 0.0)


def csg0_moments(params: Csg0Params) -> tuple[float, float]:
    """Mean and variance of the censored variable max(G - shift, 0)."""
    k, theta, delta = params.shape, params.scale, params.shift

    def upper(a):
        return float(stats.gamma.sf(delta, a=a, scale=theta))

    first = k * theta * upper(k + 1) - delta * upper(k)
    second = (
        k * (k + 1) * theta**2 * upper(k + 2)
        - 2.0 * delta * k * theta * upper(k + 1)
        + delta**2 * upper(k)
    )
    return first, max(second - first**2, 0.0)


# --- censored generalized extreme value --------------------------------------


def gev_standard_moments(shape) -> tuple[np.ndarray, np.ndarray]:
    """Mean and variance of the standard GEV law (location 0, scale 1) for 0 <= xi < 0.5."""
    xi = np.asarray(shape, dtype=float)
    gumbel = np.abs(xi) < GUMBEL_TOLERANCE
    safe = np.where(gumbel, 0.25, xi)
    g1 = special.gamma(1.0 - safe)
    g2 = special.gamma(1.0 - 2.0 * safe)
    mean = np.where(gumbel, EULER_GAMMA, (g1 - 1.0) / safe)
    variance = np.where(gumbel, math.pi**2 / 6.0, (g2 - g1**2) / safe**2)
    return mean, variance


def gev0_cdf_array(x, location, scale, shape) -> np.ndarray:
    return stats.genextreme.cdf(np.asarray(x, dtype=float), -np.asarray(shape), loc=location, scale=scale)


def gev0_survival_array(x, location, scale, shape) -> np.ndarray:
    return stats.genextreme.sf(np.asarray(x, dtype=float), -np.asarray(shape), loc=location, scale=scale)


def gev0_cdf(x, params: Gev0Params):
    """Uncensored GEV CDF for x >= 0; the mass below 0 is the atom at 0."""
    x = _check_point(x)
    return _scalar(gev0_cdf_array(x, params.location, params.scale, params.shape))


def gev0_quantile(p: float, params: Gev0Params) -> float:
    p = _check_probability(p)
    if p <= float(gev0_cdf_array(0.0, params.location, params.scale, params.shape)):
        return 0.0
    value = stats.genextreme.ppf(p, -params.shape, loc=params.location, scale=params.scale)
    return max(float(value), 0.0)


def gev0_sample(params: Gev0Params, rng: np.random.Generator, n: int) -> np.ndarray:
    if n < 0:
        raise ValueError(f"Sample size must be >= 0, got {n}")
    draws = stats.genextreme.rvs(
        -params.shape, loc=params.location, scale=params.scale, size=n, random_state=rng
    )
    return np.maximum(np.asarray(draws, dtype=float), 0.0)


def gev0_moments(params: Gev0Params) -> tuple[float, float]:
    """Mean and variance of the censored variable max(X, 0), by quadrature of the survival function."""
    survival = lambda x: gev0_survival_array(x, params.location, params.scale, params.shape)
    first, _ = integrate(survival, 0.0, math.inf)
    second, _ = integrate(lambda x: 2.0 * x * survival(x), 0.0, math.inf)
    return first, max(second - first**2, 0.0)


def gev0_abs_mean_bound(location, scale, shape) -> np.ndarray:
    """Upper bound on E|X| for the uncensored GEV, used to bound truncated CRPS tails."""
    mean, variance = gev_standard_moments(shape)
    return np.abs(location) + np.asarray(scale) * np.sqrt(variance + mean**2)
