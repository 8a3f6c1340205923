import logging
import math
from dataclasses import replace

import numpy as np

from chi0_emos.engine.emos.climatology import climatological_shift
from chi0_emos.engine.emos.link import feasible, link_batch
from chi0_emos.engine.numerics import DEFAULT_SPEC
from chi0_emos.engine.optimizer import DEFAULT_CONFIG, minimize
from chi0_emos.engine.scoring import crps_batch
from chi0_emos.model.distribution import Family
from chi0_emos.model.emos import EmosCoefficients, TrainingDiagnostics, TrainingWindow
from chi0_emos.model.error.Distribution import DistributionException
from chi0_emos.model.error.Emos import MomentMatchingException
from chi0_emos.model.numerics import QuadratureSpec
from chi0_emos.model.optimizer import SimplexConfig


def mean_crps_objective(
    vector,
    window: TrainingWindow,
    family: Family,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> float:
    """Mean CRPS over a window for a raw coefficient vector.

    Proposals violating the family constraints, or whose linked mean cannot be
    moment-matched, score +inf. A quadrature failure also scores +inf and is
    logged, so one bad proposal never ends a training run.
    """
    if not feasible(vector, family):
        return math.inf
    try:
        batch = link_batch(vector, window.means, window.sds, family)
        scores, _, converged = crps_batch(batch, window.observations, spec)
    except (MomentMatchingException, DistributionException, FloatingPointError):
        return math.inf
    if not converged.all():
        logging.warning(
            f"CRPS quadrature failed for {int((~converged).sum())} of {window.size} cases "
            f"({family.value}, coefficients {np.round(np.asarray(vector, dtype=float), 6).tolist()})"
        )
        return math.inf
    value = float(np.mean(scores))
    return value if math.isfinite(value) else math.inf


def _fixed_shift(window: TrainingWindow, start: EmosCoefficients | None, spec: QuadratureSpec) -> float:
    if start is not None:
        return float(start.extra)
    return climatological_shift(window.observations, spec=spec)


def train_window(
    window: TrainingWindow,
    family: Family = Family.CHI0,
    start: EmosCoefficients | None = None,
    config: SimplexConfig = DEFAULT_CONFIG,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> tuple[EmosCoefficients, TrainingDiagnostics]:
    """Fit coefficients by Nelder-Mead minimisation of the window's mean CRPS.

    The CSG0 shift is not trained: it is taken from `start`, or from a climatological
    fit to the window's observations when no start is given, and only a, b, c, d
    enter the simplex. The GEV0 shape is trained with the link coefficients.

    Args:
        window (TrainingWindow): Training cases.
        family (Family, optional): Family to fit. Defaults to Chi0.
        start (EmosCoefficients | None, optional): Starting coefficients; defaults to
            a = 0.5, b = c = d = 1 (and the family's starting extra constant).
        config (SimplexConfig, optional): Simplex settings.
        spec (QuadratureSpec, optional): CRPS quadrature tolerances.

    Returns:
        tuple[EmosCoefficients, TrainingDiagnostics]: Fitted coefficients and the
        convergence flag, evaluation count and objective values.
    """
    if start is not None and start.family != family:
        raise ValueError(f"Starting coefficients are {start.family.value}, expected {family.value}")
    if family == Family.CSG0:
        shift = _fixed_shift(window, start, spec)
        start = replace(start or EmosCoefficients.default_start(family), extra=shift)
        start_vector = start.to_vector()[:4]
        objective = lambda v: mean_crps_objective(np.append(v, shift), window, family, spec)
    else:
        if start is None:
            start = EmosCoefficients.default_start(family)
        start_vector = start.to_vector()
        objective = lambda v: mean_crps_objective(v, window, family, spec)

    result = minimize(objective, start_vector, config)
    start_value = result.start_value
    if not result.converged:
        logging.warning(
            f"{family.value} training did not converge within {result.evals} evaluations "
            f"(mean CRPS {result.value:.6f})"
        )
    # the start vertex is part of the simplex, so the best value never exceeds it
    assert result.value <= start_value
    argmin = result.argmin if family != Family.CSG0 else np.append(result.argmin, start.extra)
    coefficients = EmosCoefficients.from_vector(argmin, family)
    return coefficients, TrainingDiagnostics(
        converged=result.converged,
        evals=result.evals,
        objective=result.value,
        start_objective=start_value,
    )
