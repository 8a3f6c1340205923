import logging
import math
from typing import Callable, Sequence

import numpy as np

from chi0_emos.model.error.Optimizer import InvalidStartException
from chi0_emos.model.optimizer import SimplexConfig, SimplexResult

DEFAULT_CONFIG = SimplexConfig()
DEFAULT_STEP_FRACTION = 0.25


def initial_simplex(start: np.ndarray, config: SimplexConfig) -> np.ndarray:
    """Start vertex plus one vertex per coordinate, offset by a fraction of |x_i| (floored)."""
    dim = start.size
    fractions = (
        np.full(dim, DEFAULT_STEP_FRACTION)
        if config.initial_step_fractions is None
        else np.asarray(config.initial_step_fractions, dtype=float)
    )
    steps = np.maximum(fractions * np.abs(start), config.min_step)
    simplex = np.tile(start, (dim + 1, 1))
    simplex[1:] += np.diag(steps)
    return simplex


def minimize(
    objective: Callable[[np.ndarray], float],
    start: Sequence[float],
    config: SimplexConfig = DEFAULT_CONFIG,
) -> SimplexResult:
    """Minimise `objective` with the Nelder-Mead simplex method.

    The objective may return +inf to reject a proposal; NaN is treated the same
    way after the start. Such vertices sort last and are never expanded towards,
    because expansion is only tried from a reflected point that beats the best vertex.

    Args:
        objective (Callable[[numpy.ndarray], float]): Function to minimise.
        start (Sequence[float]): Starting point, dimension >= 1.
        config (SimplexConfig, optional): Coefficients and stopping rules.

    Returns:
        SimplexResult: Best vertex, its value, evaluations spent, whether a tolerance
        (rather than the evaluation budget) stopped the search, and the best-value trace.

    Raises:
        InvalidStartException: If the objective is NaN or infinite at `start`.
    """
    x0 = np.asarray(start, dtype=float).ravel()
    config.validate_dimension(x0.size)
    evals = 0

    def evaluate(x: np.ndarray) -> float:
        nonlocal evals
        evals += 1
        value = float(objective(x))
        return math.inf if math.isnan(value) else value

    f0 = float(objective(x0))
    evals += 1
    if not math.isfinite(f0):
        raise InvalidStartException(f"Objective must be finite at the start, got {f0}")

    simplex = initial_simplex(x0, config)
    values = np.empty(x0.size + 1)
    values[0] = f0
    for i in range(1, x0.size + 1):
        values[i] = evaluate(simplex[i])

    trace: list[float] = []
    converged = False
    while True:
        # stable sort keeps the start vertex first among ties
        order = np.argsort(values, kind="stable")
        simplex, values = simplex[order], values[order]
        trace.append(float(values[0]))

        diameter = float(np.max(np.abs(simplex[1:] - simplex[0])))
        spread = float(values[-1] - values[0])
        if diameter < config.x_tol or spread < config.f_tol:
            converged = True
            break
        if evals >= config.max_evals:
            break

        centroid = simplex[:-1].mean(axis=0)
        worst = simplex[-1]
        reflected = centroid + config.reflection * (centroid - worst)
        f_reflected = evaluate(reflected)

        if f_reflected < values[0]:
            expanded = centroid + config.expansion * (reflected - centroid)
            f_expanded = evaluate(expanded)
            if f_expanded < f_reflected:
                simplex[-1], values[-1] = expanded, f_expanded
            else:
                simplex[-1], values[-1] = reflected, f_reflected
            continue
        if f_reflected < values[-2]:
            simplex[-1], values[-1] = reflected, f_reflected
            continue

        if f_reflected < values[-1]:
            contracted = centroid + config.contraction * (reflected - centroid)
        else:
            contracted = centroid + config.contraction * (worst - centroid)
        f_contracted = evaluate(contracted)
        if f_contracted < min(f_reflected, values[-1]):
            simplex[-1], values[-1] = contracted, f_contracted
            continue

        # shrink towards the best vertex
        best = simplex[0]
        for i in range(1, simplex.shape[0]):
            simplex[i] = best + config.shrink * (simplex[i] - best)
            values[i] = evaluate(simplex[i])

    if not converged:
        logging.debug(f"Nelder-Mead stopped on its budget after {evals} evaluations")
    return SimplexResult(
        argmin=simplex[0].copy(),
        value=float(values[0]),
        evals=evals,
        converged=converged,
        start_value=f0,
        trace=tuple(trace),
    )
