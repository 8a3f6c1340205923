"""Climatological CSG0 law of a station.

The CSG0 shift trades off against the link intercept when both are trained on one
window, so it is estimated once from the observations alone and then held fixed
while the link coefficients are trained.
"""

import logging
import math

import numpy as np

from chi0_emos.engine.distributions import DistributionBatch
from chi0_emos.engine.numerics import DEFAULT_SPEC
from chi0_emos.engine.optimizer import DEFAULT_CONFIG, minimize
from chi0_emos.engine.scoring import crps_batch
from chi0_emos.model.distribution import Csg0Params, Family
from chi0_emos.model.error.Dataset import EmptyInputException
from chi0_emos.model.error.Distribution import DistributionException
from chi0_emos.model.numerics import QuadratureSpec
from chi0_emos.model.optimizer import SimplexConfig

# start of the shift as a fraction of the starting scale
START_SHIFT_FRACTION = 0.1
MIN_START_SCALE = 0.1


def climatology_objective(vector, observations: np.ndarray, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Mean CRPS of one CSG0 law (shape, scale, shift) = (u^2, v^2, w^2) over all observations.

    The shift may not exceed the largest observation.
    """
    u, v, w = (float(x) for x in vector)
    shape, scale, shift = u * u, v * v, w * w
    if not (shape > 0.0 and scale > 0.0 and math.isfinite(shape * scale)) or shift > observations.max():
        return math.inf
    n = observations.size
    batch = DistributionBatch(Family.CSG0, (np.full(n, shape), np.full(n, scale), np.full(n, shift)))
    try:
        scores, _, converged = crps_batch(batch, observations, spec)
    except DistributionException:
        return math.inf
    if not converged.all():
        return math.inf
    value = float(np.mean(scores))
    return value if math.isfinite(value) else math.inf


def climatological_fit(
    observations,
    config: SimplexConfig = DEFAULT_CONFIG,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> Csg0Params:
    """Minimum-CRPS CSG0 law for a sample of observations.

    A sample without any positive value has no scale to fit; it maps to an
    exponential law of scale 0.1 without shift.

    Raises:
        EmptyInputException: If there are no observations.
    """
    observations = np.asarray(observations, dtype=float).ravel()
    if observations.size == 0:
        raise EmptyInputException("Cannot fit a climatological law to no observations")
    if observations.max() <= 0.0:
        logging.info("All observations are zero; climatological CSG0 law falls back to no shift")
        return Csg0Params(shape=1.0, scale=MIN_START_SCALE, shift=0.0)

    scale = max(float(np.mean(observations)), MIN_START_SCALE)
    start = [1.0, math.sqrt(scale), math.sqrt(START_SHIFT_FRACTION * scale)]
    if start[2] ** 2 > observations.max():
        start[2] = 0.0
    result = minimize(lambda v: climatology_objective(v, observations, spec), start, config)
    if not result.converged:
        logging.warning(f"Climatological CSG0 fit stopped after {result.evals} evaluations")
    u, v, w = (float(x) for x in result.argmin)
    return Csg0Params(shape=u * u, scale=v * v, shift=w * w)


def climatological_shift(
    observations,
    config: SimplexConfig = DEFAULT_CONFIG,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> float:
    return climatological_fit(observations, config, spec).shift
