import math

import numpy as np
import pytest

from chi0_emos.engine.numerics import gauss_kronrod, integrate, integrate_batch
from chi0_emos.model.error.Numerics import QuadratureConvergenceException
from chi0_emos.model.numerics import QuadratureSpec

ANALYTIC_INTEGRALS = [
    (lambda x: x, 0.0, 1.0, 0.5),
    (lambda x: x**2, 0.0, 3.0, 9.0),
    (lambda x: np.exp(-x), 0.0, math.inf, 1.0),
    (lambda x: np.exp(-2.0 * x), 1.0, math.inf, 0.5 * math.exp(-2.0)),
    (lambda x: np.sin(x), 0.0, math.pi, 2.0),
    (lambda x: np.cos(x), 0.0, 0.5 * math.pi, 1.0),
    (lambda x: 1.0 / (1.0 + x**2), 0.0, math.inf, 0.5 * math.pi),
    (lambda x: 1.0 / (1.0 + x**2), -1.0, 1.0, 0.5 * math.pi),
    (lambda x: np.sqrt(x), 0.0, 1.0, 2.0 / 3.0),
    (lambda x: np.log1p(x), 0.0, 1.0, 2.0 * math.log(2.0) - 1.0),
    (lambda x: x * np.exp(-x), 0.0, math.inf, 1.0),
    (lambda x: x**2 * np.exp(-x), 0.0, math.inf, 2.0),
    (lambda x: np.exp(-(x**2)), 0.0, math.inf, 0.5 * math.sqrt(math.pi)),
    (lambda x: 1.0 / x, 1.0, math.e, 1.0),
    (lambda x: x**5 - 2.0 * x, -1.0, 2.0, 10.5 - 3.0),
    (lambda x: np.exp(x), 0.0, 1.0, math.e - 1.0),
    (lambda x: 1.0 / (1.0 + x) ** 3, 0.0, math.inf, 0.5),
    (lambda x: np.abs(x - 0.3), 0.0, 1.0, 0.5 * (0.09 + 0.49)),
    (lambda x: np.where(x < 0.5, 1.0, 0.0), 0.0, 1.0, 0.5),
    (lambda x: np.sin(x) ** 2, 0.0, 2.0 * math.pi, math.pi),
]


@pytest.mark.quadrature
def test_if_integrates_identity_on_unit_interval():
    """Verify that the integral of x over [0, 1] is 0.5 to 1e-12."""
    value, error = integrate(lambda x: x, 0.0, 1.0)
    assert value == pytest.approx(0.5, abs=1e-12)
    assert error <= 1e-9


@pytest.mark.quadrature
def test_if_integrates_semi_infinite_exponential():
    """Verify that the integral of exp(-x) over [0, inf) is 1 to 1e-10."""
    value, _ = integrate(lambda x: np.exp(-x), 0.0, math.inf)
    assert value == pytest.approx(1.0, abs=1e-10)


@pytest.mark.quadrature
def test_if_gauss_kronrod_is_exact_for_low_degree_polynomials():
    """Verify that a single 15-point rule integrates a degree 13 polynomial exactly."""
    value, error = gauss_kronrod(lambda x: x**13 + x**4, 0.0, 1.0)
    assert value == pytest.approx(1.0 / 14.0 + 0.2, abs=1e-14)
    assert error < 1e-12


@pytest.mark.quadrature
@pytest.mark.parametrize("f,lo,hi,expected", ANALYTIC_INTEGRALS)
def test_error_estimate_honesty(f, lo, hi, expected):
    """Verify that the true error never exceeds ten times the reported estimate."""
    value, error = integrate(f, lo, hi)
    assert abs(value - expected) <= 10.0 * error + 1e-13


@pytest.mark.quadrature
def test_if_integral_is_linear(rng):
    """Verify that integrate(a f + b g) equals a integrate(f) + b integrate(g) on random polynomials."""
    for _ in range(10):
        p = rng.normal(size=5)
        q = rng.normal(size=5)
        a, b = rng.normal(size=2)
        f = lambda x: np.polyval(p, x)
        g = lambda x: np.polyval(q, x)
        combined, error = integrate(lambda x: a * f(x) + b * g(x), -1.0, 2.0)
        separate = a * integrate(f, -1.0, 2.0)[0] + b * integrate(g, -1.0, 2.0)[0]
        assert combined == pytest.approx(separate, abs=1e-9 + 10 * error)


@pytest.mark.quadrature
def test_if_scalar_integrands_are_supported():
    """Verify that an integrand accepting only scalars is evaluated point by point."""
    value, _ = integrate(lambda x: math.exp(-x), 0.0, 2.0)
    assert value == pytest.approx(1.0 - math.exp(-2.0), abs=1e-12)


@pytest.mark.quadrature
def test_if_non_convergence_carries_best_estimate():
    """Verify that running out of subdivisions raises with the estimate and its error bound."""
    spec = QuadratureSpec(abs_tol=1e-15, rel_tol=1e-15, max_subdivisions=2)
    with pytest.raises(QuadratureConvergenceException) as error:
        integrate(lambda x: 1.0 / np.sqrt(x + 1e-12), 0.0, 1.0, spec)
    assert error.value.value > 0.0
    assert error.value.error_estimate > 0.0


@pytest.mark.quadrature
def test_if_invalid_limits_are_rejected():
    """Verify that reversed or infinite lower limits are rejected."""
    with pytest.raises(ValueError):
        integrate(lambda x: x, 1.0, 0.0)
    with pytest.raises(ValueError):
        integrate(lambda x: x, -math.inf, 0.0)


@pytest.mark.quadrature
def test_if_batch_matches_scalar_integration():
    """Verify that batch integration of x^k over [0, k] matches the closed form per integrand."""
    powers = np.array([0.0, 1.0, 2.0, 3.0, 0.5])
    lo = np.zeros(powers.size)
    hi = np.array([1.0, 2.0, 3.0, 4.0, 5.0])
    values, errors, converged = integrate_batch(lambda x, owner: x ** powers[owner], lo, hi)
    expected = hi ** (powers + 1.0) / (powers + 1.0)
    assert converged.all()
    np.testing.assert_allclose(values, expected, rtol=1e-9)
    assert np.all(errors >= 0.0)


@pytest.mark.quadrature
def test_if_batch_handles_empty_intervals():
    """Verify that intervals with lo == hi integrate to exactly 0."""
    values, errors, converged = integrate_batch(
        lambda x, owner: np.ones_like(x), np.array([1.0, 0.0]), np.array([1.0, 2.0])
    )
    assert values[0] == 0.0
    assert values[1] == pytest.approx(2.0, abs=1e-12)
    assert converged.all()
