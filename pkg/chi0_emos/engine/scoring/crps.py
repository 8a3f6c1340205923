import numpy as np

from chi0_emos.engine.distributions import DistributionBatch, PredictiveDistribution
from chi0_emos.engine.numerics import DEFAULT_SPEC, integrate_batch
from chi0_emos.model.error.Dataset import EmptyInputException
from chi0_emos.model.error.Distribution import DomainException
from chi0_emos.model.error.Numerics import QuadratureConvergenceException
from chi0_emos.model.numerics import QuadratureSpec


def crps_batch(
    batch: DistributionBatch,
    y,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """CRPS of every distribution of a batch against its observation.

    CRPS(F, y) = int_0^y F(x)^2 dx + int_y^inf (1 - F(x))^2 dx, since F vanishes
    below 0. The upper integral stops at x*, where the survival probability falls
    below `spec.tail_cutoff_probability`; the dropped tail is at most
    S(x*) * E[max(X, 0)] and is added to the error estimate.

    Returns:
        tuple[numpy.ndarray, numpy.ndarray, numpy.ndarray]: Scores, error estimates
        and a boolean convergence mask.
    """
    y = np.asarray(y, dtype=float).ravel()
    n = batch.size
    if y.size != n:
        raise ValueError(f"{y.size} observations for {n} distributions")
    if np.any(~np.isfinite(y)) or np.any(y < 0.0):
        raise DomainException("Observations must be finite and >= 0")

    cutoff = batch.tail_point(spec.tail_cutoff_probability)
    upper = np.maximum(cutoff, y)
    lo = np.concatenate([np.zeros(n), y])
    hi = np.concatenate([y, upper])

    def integrand(x, owner):
        case = owner % n
        below = owner < n
        out = np.empty(x.shape)
        out[below] = batch.cdf(x[below], case[below]) ** 2
        out[~below] = batch.survival(x[~below], case[~below]) ** 2
        return out

    values, errors, converged = integrate_batch(integrand, lo, hi, spec)
    tail = batch.survival(upper, np.arange(n)) * batch.positive_mean_bound()
    scores = values[:n] + values[n:]
    error = errors[:n] + errors[n:] + np.maximum(tail, 0.0)
    return np.maximum(scores, 0.0), error, converged[:n] & converged[n:]


def crps_distribution(
    dist: PredictiveDistribution,
    y: float,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> float:
    """CRPS of one predictive distribution at observation y >= 0, by quadrature.

    Raises:
        DomainException: If y is negative.
        QuadratureConvergenceException: If the integral does not converge.
    """
    if not y >= 0.0:
        raise DomainException(f"Observation must be >= 0, got {y}")
    scores, errors, converged = crps_batch(DistributionBatch.from_distributions([dist]), [y], spec)
    if not converged[0]:
        raise QuadratureConvergenceException(
            f"CRPS quadrature for {dist.family.value} {dist.parameter_row()} at y={y} did not converge",
            float(scores[0]),
            float(errors[0]),
        )
    return float(scores[0])


def crps_ensemble_array(members, y) -> np.ndarray:
    """Ensemble CRPS of each row of an (n, m) member array against y of length n.

    Uses the sorted-member form of (1/m) sum|f_i - y| - (1/2m^2) sum_ij |f_i - f_j|:
    the double sum equals 2 * sum_i (2i - m - 1) f_(i) over the sorted members.
    """
    members = np.asarray(members, dtype=float)
    if members.ndim == 1:
        members = members[None, :]
    y = np.asarray(y, dtype=float).reshape(-1)
    m = members.shape[1]
    if m == 0 or members.shape[0] == 0:
        raise EmptyInputException("Ensemble CRPS needs at least one member")
    ordered = np.sort(members, axis=1)
    weights = 2.0 * np.arange(1, m + 1) - m - 1.0
    accuracy = np.mean(np.abs(ordered - y[:, None]), axis=1)
    spread = (ordered @ weights) / m**2
    return np.maximum(accuracy - spread, 0.0)


def crps_ensemble(members, y: float) -> float:
    """Ensemble CRPS of one forecast case."""
    members = np.asarray(members, dtype=float).ravel()
    if members.size == 0:
        raise EmptyInputException("Ensemble CRPS needs at least one member")
    return float(crps_ensemble_array(members[None, :], [y])[0])
