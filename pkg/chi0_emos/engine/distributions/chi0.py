"""Scaled zero degree of freedom non-central chi squared distribution.

With the degrees of freedom fixed to 0 the law is a Poisson(lam/2) mixture of a
point mass at 0 and central chi squared laws with 2, 4, 6, ... degrees of freedom.
For even degrees of freedom 2j the central CDF has the closed Erlang form
P(chi2_2j <= z) = P(Poisson(z/2) >= j), so the whole series is evaluated with
Poisson probabilities only.
"""

import math

import numpy as np

from chi0_emos.engine.numerics import find_root, find_roots_batch
from chi0_emos.model.distribution import Chi0Params
from chi0_emos.model.error.Distribution import DomainException

# cumulative Poisson weight at which the mixture series stops
SERIES_MASS = 1.0 - 1e-14


def series_cap(lam: float) -> int:
    """Hard cap on the number of mixture terms for non-centrality `lam`."""
    mu = 0.5 * lam
    return int(math.ceil(mu + 40.0 * math.sqrt(mu + 1.0) + 100.0))


def series_length(lam: float) -> int:
    """Number of Poisson terms j = 0, 1, ... needed before the cumulative weight exceeds 1 - 1e-14."""
    mu = 0.5 * lam
    if mu == 0.0:
        return 1
    cap = series_cap(lam)
    j = np.arange(cap)
    log_weights = -mu + j * math.log(mu) - _log_factorials(cap)
    cumulative = np.cumsum(np.exp(log_weights))
    reached = np.flatnonzero(cumulative > SERIES_MASS)
    return int(reached[0]) + 1 if reached.size else cap


def _log_factorials(n: int) -> np.ndarray:
    out = np.zeros(n)
    if n > 1:
        out[1:] = np.cumsum(np.log(np.arange(1, n)))
    return out


def _poisson_pmf(mean: np.ndarray, terms: int) -> np.ndarray:
    """Poisson probabilities of 0..terms-1 for every entry of `mean`, stacked on the last axis."""
    mean = np.asarray(mean, dtype=float)[..., None]
    k = np.arange(terms)
    with np.errstate(divide="ignore", invalid="ignore"):
        log_pmf = -mean + k * np.log(mean) - _log_factorials(terms)
    pmf = np.exp(log_pmf)
    # mean == 0 is the point mass at k = 0
    return np.where(mean > 0.0, pmf, (k == 0).astype(float))


def chi0_cdf_array(x, lam, sigma) -> np.ndarray:
    """Vectorised CDF F0(x / sigma; lam) for nonnegative x with broadcasting parameters.

    The mixture weights p_j = Poisson(j; lam/2) are summed up to the largest series
    length any entry needs; entries needing fewer terms only gain exactness.
    """
    x, lam, sigma = np.broadcast_arrays(
        np.asarray(x, dtype=float), np.asarray(lam, dtype=float), np.asarray(sigma, dtype=float)
    )
    if x.size == 0:
        return np.zeros(x.shape)
    terms = max(series_length(float(np.max(lam))), 1)
    weights = _poisson_pmf(0.5 * lam, terms)
    if terms == 1:
        return np.where(np.isposinf(x), 1.0, np.clip(weights[..., 0], 0.0, 1.0))
    # F = W - sum_k pmf_k(x / 2 sigma) * (p_{k+1} + ... + p_{J-1})
    tails = np.cumsum(weights[..., :0:-1], axis=-1)[..., ::-1]
    erlang = _poisson_pmf(x / (2.0 * sigma), terms - 1)
    total = np.sum(weights, axis=-1)
    cdf = total - np.sum(erlang * tails, axis=-1)
    # the atom is exactly p_0 = exp(-lam / 2)
    cdf = np.where(x == 0.0, weights[..., 0], cdf)
    cdf = np.where(np.isposinf(x), 1.0, cdf)
    return np.clip(cdf, 0.0, 1.0)


def _check_point(x):
    x = np.asarray(x, dtype=float)
    if np.any(np.isnan(x)) or np.any(x < 0.0):
        raise DomainException(f"CDF is defined on x >= 0 only, got {x}")
    return x


def _check_probability(p):
    p = np.asarray(p, dtype=float)
    if np.any(np.isnan(p)) or np.any(p < 0.0) or np.any(p >= 1.0):
        raise DomainException(f"Quantile level must lie in [0, 1), got {p}")
    return p


def chi0_cdf(x, params: Chi0Params):
    """CDF of the scaled distribution at x >= 0; scalar in, float out."""
    x = _check_point(x)
    value = chi0_cdf_array(x, params.lam, params.sigma)
    return float(value) if value.ndim == 0 else value


def _upper_bracket(p: float, lam: float, sigma: float) -> tuple[float, bool]:
    """Right end of a bracket for level p and whether the CDF reaches p there.

    Doubling stops once the CDF stops growing: the truncated series tops out just
    below 1, so levels above that ceiling map to the point where it is reached.
    """
    mean = sigma * lam
    hi = max(mean + 10.0 * 2.0 * sigma * math.sqrt(lam), sigma)
    value = float(chi0_cdf_array(hi, lam, sigma))
    while value < p:
        wider = 2.0 * hi
        if not math.isfinite(wider):
            return hi, False
        wider_value = float(chi0_cdf_array(wider, lam, sigma))
        if wider_value <= value:
            return hi, False
        hi, value = wider, wider_value
    return hi, True


def chi0_quantile(p: float, params: Chi0Params, tol: float = 1e-10) -> float:
    """Smallest x with CDF(x) >= p.

    Every p up to the atom exp(-lam/2) maps to 0; above it the CDF is continuous
    and strictly increasing, so the root is unique. A level beyond the largest
    value the truncated series attains maps to where the CDF stops growing.

    Raises:
        DomainException: If p is outside [0, 1).
    """
    p = float(_check_probability(p))
    if p <= params.point_mass:
        return 0.0
    hi, reached = _upper_bracket(p, params.lam, params.sigma)
    if not reached:
        return hi
    return find_root(
        lambda v: float(chi0_cdf_array(v, params.lam, params.sigma)) - p, 0.0, hi, tol
    )


def chi0_quantile_array(p, lam, sigma, tol: float = 1e-10) -> np.ndarray:
    """Vectorised quantile used for tail cut-offs of batched CRPS integrals; returns a flat array."""
    p, lam, sigma = np.broadcast_arrays(
        _check_probability(p), np.asarray(lam, dtype=float), np.asarray(sigma, dtype=float)
    )
    p, lam, sigma = p.ravel(), lam.ravel(), sigma.ravel()
    out = np.zeros(p.size)
    above = p > np.exp(-0.5 * lam)
    if not above.any():
        return out.reshape(np.shape(p))
    pa, la, sa = p[above], lam[above], sigma[above]
    hi = np.maximum(sa * la + 20.0 * sa * np.sqrt(la), sa)
    value = chi0_cdf_array(hi, la, sa)
    active = value < pa
    while active.any():
        wider = np.where(active, 2.0 * hi, hi)
        wider_value = chi0_cdf_array(wider, la, sa)
        grew = active & np.isfinite(wider) & (wider_value > value)
        hi = np.where(grew, wider, hi)
        value = np.where(grew, wider_value, value)
        active = grew & (value < pa)
    reached = value >= pa
    roots = hi.copy()
    if reached.any():
        pr, lr, sr = pa[reached], la[reached], sa[reached]
        roots[reached] = find_roots_batch(
            lambda v, i: chi0_cdf_array(v, lr[i], sr[i]) - pr[i], np.zeros(pr.size), hi[reached], tol
        )
    out[above] = roots
    return out


def chi0_sample(params: Chi0Params, rng: np.random.Generator, n: int) -> np.ndarray:
    """Draw n values by the compound Poisson construction.

    J ~ Poisson(lam/2); J = 0 gives an exact zero, otherwise sigma times a central
    chi squared draw with 2J degrees of freedom (a Gamma(J, 2) draw).
    """
    if n < 0:
        raise ValueError(f"Sample size must be >= 0, got {n}")
    j = rng.poisson(0.5 * params.lam, size=n)
    draws = rng.gamma(shape=np.maximum(j, 1), scale=2.0, size=n)
    return np.where(j > 0, params.sigma * draws, 0.0)


def chi0_moments(params: Chi0Params) -> tuple[float, float]:
    """Mean sigma * lam and variance 4 * sigma^2 * lam."""
    return params.sigma * params.lam, 4.0 * params.sigma**2 * params.lam
