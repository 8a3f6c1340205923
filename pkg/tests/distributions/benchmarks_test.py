import math

import numpy as np
import pytest
from scipy import stats

from chi0_emos.engine.distributions import (
    csg0_cdf,
    csg0_moments,
    csg0_quantile,
    csg0_sample,
    gev0_cdf,
    gev0_moments,
    gev0_quantile,
    gev0_sample,
    gev_standard_moments,
)
from chi0_emos.engine.distributions.benchmarks import csg0_cdf_array, gev0_cdf_array
from chi0_emos.model.distribution import Csg0Params, Gev0Params
from chi0_emos.model.error.Distribution import DomainException, InvalidParameterException


@pytest.mark.distribution
def test_if_unshifted_gamma_has_no_atom():
    """Verify that a shift of 0 leaves no mass at zero."""
    assert csg0_cdf(0.0, Csg0Params(shape=2.0, scale=1.5, shift=0.0)) == 0.0


@pytest.mark.distribution
def test_if_shift_moves_mass_to_atom():
    """Verify that the atom of a shifted gamma is the gamma CDF at the shift."""
    params = Csg0Params(shape=2.0, scale=1.5, shift=1.0)
    assert csg0_cdf(0.0, params) == pytest.approx(stats.gamma.cdf(1.0, a=2.0, scale=1.5), abs=1e-14)
    assert csg0_cdf(2.0, params) == pytest.approx(stats.gamma.cdf(3.0, a=2.0, scale=1.5), abs=1e-14)


@pytest.mark.distribution
def test_if_gumbel_cdf_at_zero_is_exact():
    """Verify that GEV0 with location 1, scale 1, xi 0 has CDF exp(-e) at 0."""
    assert gev0_cdf(0.0, Gev0Params(location=1.0, scale=1.0, shape=0.0)) == pytest.approx(
        math.exp(-math.e), abs=1e-14
    )


@pytest.mark.distribution
def test_if_positive_shape_thickens_upper_tail():
    """Verify that xi > 0 gives a heavier upper tail than the Gumbel law."""
    gumbel = Gev0Params(location=1.0, scale=1.0, shape=0.0)
    frechet = Gev0Params(location=1.0, scale=1.0, shape=0.3)
    assert gev0_cdf(20.0, frechet) < gev0_cdf(20.0, gumbel)


@pytest.mark.distribution
def test_if_invalid_benchmark_parameters_are_rejected():
    """Verify that the parameter records refuse values outside their ranges."""
    with pytest.raises(InvalidParameterException):
        Csg0Params(shape=0.0, scale=1.0)
    with pytest.raises(InvalidParameterException):
        Csg0Params(shape=1.0, scale=1.0, shift=-0.5)
    with pytest.raises(InvalidParameterException):
        Gev0Params(location=0.0, scale=-1.0)
    with pytest.raises(InvalidParameterException):
        Gev0Params(location=0.0, scale=1.0, shape=0.5)
    with pytest.raises(InvalidParameterException):
        Gev0Params(location=0.0, scale=1.0, shape=-0.1)


@pytest.mark.distribution
def test_if_benchmarks_reject_negative_points():
    """Verify that the benchmark CDFs raise on x < 0."""
    with pytest.raises(DomainException):
        csg0_cdf(-1.0, Csg0Params(shape=1.0, scale=1.0))
    with pytest.raises(DomainException):
        gev0_cdf(-1.0, Gev0Params(location=0.0, scale=1.0))


@pytest.mark.distribution
def test_if_benchmark_quantiles_respect_atom():
    """Verify that levels under the atom give 0 and levels above it invert the CDF."""
    csg = Csg0Params(shape=2.0, scale=1.0, shift=1.0)
    atom = csg0_cdf(0.0, csg)
    assert csg0_quantile(0.5 * atom, csg) == 0.0
    assert csg0_cdf(csg0_quantile(0.8, csg), csg) == pytest.approx(0.8, abs=1e-10)

    gev = Gev0Params(location=1.0, scale=1.0, shape=0.2)
    atom = gev0_cdf(0.0, gev)
    assert gev0_quantile(0.5 * atom, gev) == 0.0
    assert gev0_cdf(gev0_quantile(0.8, gev), gev) == pytest.approx(0.8, abs=1e-10)


@pytest.mark.distribution
def test_if_gumbel_moments_are_recovered():
    """Verify that the standard GEV moments tend to (Euler gamma, pi^2/6) as xi goes to 0."""
    mean, variance = gev_standard_moments(np.array([0.0, 1e-4]))
    assert mean[0] == pytest.approx(0.5772156649015329)
    assert variance[0] == pytest.approx(math.pi**2 / 6.0)
    assert mean[1] == pytest.approx(0.5772156649015329, rel=1e-3)
    assert variance[1] == pytest.approx(math.pi**2 / 6.0, rel=1e-3)


@pytest.mark.distribution
def test_if_standard_gev_moments_match_scipy():
    """Verify that the closed-form GEV moments agree with scipy for a positive shape."""
    mean, variance = gev_standard_moments(0.2)
    assert float(mean) == pytest.approx(stats.genextreme.mean(-0.2), rel=1e-10)
    assert float(variance) == pytest.approx(stats.genextreme.var(-0.2), rel=1e-10)


@pytest.mark.distribution
def test_if_censored_moments_without_shift_are_gamma_moments():
    """Verify that an unshifted gamma keeps mean k theta and variance k theta^2."""
    mean, variance = csg0_moments(Csg0Params(shape=4.0, scale=1.0))
    assert mean == pytest.approx(4.0, abs=1e-12)
    assert variance == pytest.approx(4.0, abs=1e-10)


@pytest.mark.distribution
@pytest.mark.monte_carlo
def test_if_censored_moments_match_samples(rng):
    """Verify that the censored moments of both benchmarks agree with sample moments."""
    n = 400_000
    csg = Csg0Params(shape=1.5, scale=2.0, shift=1.0)
    draws = csg0_sample(csg, rng, n)
    mean, variance = csg0_moments(csg)
    assert draws.mean() == pytest.approx(mean, abs=4.0 * math.sqrt(variance / n))
    assert draws.var() == pytest.approx(variance, rel=0.02)

    gev = Gev0Params(location=1.0, scale=1.5, shape=0.1)
    draws = gev0_sample(gev, rng, n)
    mean, variance = gev0_moments(gev)
    assert draws.mean() == pytest.approx(mean, abs=4.0 * math.sqrt(variance / n))
    assert draws.var() == pytest.approx(variance, rel=0.03)


@pytest.mark.distribution
@pytest.mark.monte_carlo
def test_if_zero_share_matches_benchmark_atoms(rng):
    """Verify that censored draws hit zero as often as the CDF at 0 predicts."""
    n = 400_000
    for params, sample, cdf in [
        (Csg0Params(shape=2.0, scale=1.0, shift=1.0), csg0_sample, csg0_cdf),
        (Gev0Params(location=1.0, scale=1.0, shape=0.1), gev0_sample, gev0_cdf),
    ]:
        atom = cdf(0.0, params)
        share = np.mean(sample(params, rng, n) == 0.0)
        assert abs(share - atom) < 3.5 * math.sqrt(atom * (1.0 - atom) / n)


@pytest.mark.distribution
def test_if_benchmark_cdfs_are_monotone(rng):
    """Verify that x1 < x2 implies CDF(x1) <= CDF(x2) for both benchmarks over random parameter draws."""
    n = 1000
    x1 = rng.uniform(0.0, 50.0, n)
    x2 = x1 + rng.uniform(0.0, 10.0, n)

    shape, scale, shift = rng.uniform(0.2, 5.0, n), rng.uniform(0.1, 5.0, n), rng.uniform(0.0, 3.0, n)
    assert np.all(csg0_cdf_array(x1, shape, scale, shift) <= csg0_cdf_array(x2, shape, scale, shift) + 1e-15)

    location, scale, xi = rng.uniform(-2.0, 5.0, n), rng.uniform(0.1, 5.0, n), rng.uniform(0.0, 0.49, n)
    assert np.all(gev0_cdf_array(x1, location, scale, xi) <= gev0_cdf_array(x2, location, scale, xi) + 1e-15)


@pytest.mark.distribution
@pytest.mark.monte_carlo
def test_if_censored_gamma_cdf_matches_sampling(rng):
    """Verify that the CSG0 CDF agrees with clamped, shifted gamma draws."""
    n = 1_000_000
    params = Csg0Params(shape=1.5, scale=2.0, shift=0.7)
    draws = np.maximum(rng.gamma(params.shape, params.scale, n) - params.shift, 0.0)
    for x in [0.0, 0.5, 2.0, 6.0]:
        expected = csg0_cdf(x, params)
        share = np.mean(draws <= x)
        assert abs(share - expected) < 3.5 * math.sqrt(expected * (1.0 - expected) / n)
