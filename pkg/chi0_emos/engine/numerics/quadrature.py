import heapq
import logging
import math
from typing import Callable

import numpy as np

from chi0_emos.model.error.Numerics import QuadratureConvergenceException
from chi0_emos.model.numerics import QuadratureSpec

# 15-point Kronrod abscissae/weights with the embedded 7-point Gauss rule.
_XGK = np.array(
    [
        0.991455371120812639206854697526329,
        0.949107912342758524526189684047851,
        0.864864423359769072789712788640926,
        0.741531185599394439863864773280788,
        0.586087235467691130294144845693013,
        0.405845151377397166906606412076961,
        0.207784955007898467600689403773245,
        0.000000000000000000000000000000000,
    ]
)
_WGK = np.array(
    [
        0.022935322010529224963732008058970,
        0.063092092629978553290700663189204,
        0.104790010322250183839876322541518,
        0.140653259715525918745189590510238,
        0.169004726639267902826583426598550,
        0.190350578064785409913256402421014,
        0.204432940075298892414161999234649,
        0.209482141084727828012999174891714,
    ]
)
_WG = np.array(
    [
        0.129484966168869693270611432679082,
        0.279705391489276667901467771423780,
        0.381830050505118944950369775488975,
        0.417959183673469387755102040816327,
    ]
)

NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
KRONROD_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
# Gauss nodes sit at the odd positions of NODES
GAUSS_WEIGHTS = np.zeros(15)
GAUSS_WEIGHTS[1::2] = np.concatenate([_WG[:-1], _WG[::-1]])

DEFAULT_SPEC = QuadratureSpec()


def _evaluate(f: Callable, x: np.ndarray) -> np.ndarray:
    values = np.asarray(f(x), dtype=float)
    if values.shape != x.shape:
        values = np.array([float(f(v)) for v in x.ravel()]).reshape(x.shape)
    return values


def gauss_kronrod(f: Callable, a: float, b: float) -> tuple[float, float]:
    """Apply the 15-point Gauss-Kronrod rule on [a, b].

    Returns:
        tuple[float, float]: The Kronrod estimate and |Kronrod - Gauss|.
    """
    half = 0.5 * (b - a)
    center = 0.5 * (a + b)
    values = _evaluate(f, center + half * NODES)
    kronrod = half * float(KRONROD_WEIGHTS @ values)
    gauss = half * float(GAUSS_WEIGHTS @ values)
    return kronrod, abs(kronrod - gauss)


def _semi_infinite(f: Callable, lo: float) -> Callable:
    # x = lo + t / (1 - t) maps [0, 1) onto [lo, inf)
    def mapped(t):
        t = np.asarray(t, dtype=float)
        one_minus = 1.0 - t
        return _evaluate(f, lo + t / one_minus) / (one_minus * one_minus)

    return mapped


def integrate(
    f: Callable,
    lo: float,
    hi: float,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> tuple[float, float]:
    """Adaptively integrate `f` over [lo, hi].

    `f` should accept a numpy array of abscissae and return the integrand values
    elementwise; scalar-only callables are evaluated point by point. An infinite
    upper limit is handled by substituting x = lo + t / (1 - t).

    Args:
        f (Callable): Integrand, finite on (lo, hi).
        lo (float): Finite lower limit.
        hi (float): Upper limit, finite or math.inf.
        spec (QuadratureSpec): Tolerances and subdivision budget.

    Returns:
        tuple[float, float]: The integral estimate and its error estimate.

    Raises:
        ValueError: If lo is not finite or lo >= hi.
        QuadratureConvergenceException: If the tolerance is not met within
            `spec.max_subdivisions` splits. The exception carries the best estimate.
    """
    if not math.isfinite(lo):
        raise ValueError(f"Lower limit must be finite, got {lo}")
    if not lo < hi:
        raise ValueError(f"Integration limits must satisfy lo < hi, got [{lo}, {hi}]")
    if math.isinf(hi):
        f, lo, hi = _semi_infinite(f, lo), 0.0, 1.0

    value, error = gauss_kronrod(f, lo, hi)
    # max-heap on the interval error
    heap = [(-error, lo, hi, value)]
    subdivisions = 0
    while error > spec.tolerance(value):
        if subdivisions >= spec.max_subdivisions:
            raise QuadratureConvergenceException(
                f"Quadrature did not converge after {subdivisions} subdivisions "
                f"(estimate {value:.12g}, error {error:.3g})",
                value,
                error,
            )
        neg_err, a, b, part = heapq.heappop(heap)
        mid = 0.5 * (a + b)
        left, left_err = gauss_kronrod(f, a, mid)
        right, right_err = gauss_kronrod(f, mid, b)
        heapq.heappush(heap, (-left_err, a, mid, left))
        heapq.heappush(heap, (-right_err, mid, b, right))
        value += left + right - part
        error += left_err + right_err + neg_err
        subdivisions += 1
    # re-sum to shed the drift of the running updates
    value = math.fsum(item[3] for item in heap)
    error = math.fsum(-item[0] for item in heap)
    return value, error


def integrate_batch(
    f: Callable,
    lo: np.ndarray,
    hi: np.ndarray,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Integrate many integrands over finite intervals in one vectorised sweep.

    Integrand i is evaluated as `f(x, owner)` where `owner` holds the integrand
    index of every abscissa in `x`. Intervals with lo == hi contribute 0.

    Args:
        f (Callable): Vectorised integrand `f(x: ndarray, owner: ndarray) -> ndarray`.
        lo (numpy.ndarray): Lower limits.
        hi (numpy.ndarray): Upper limits, hi >= lo elementwise.
        spec (QuadratureSpec): Tolerances; `max_subdivisions` applies per integrand.

    Returns:
        tuple[numpy.ndarray, numpy.ndarray, numpy.ndarray]: Estimates, error
        estimates and a boolean convergence mask.
    """
    lo = np.asarray(lo, dtype=float)
    hi = np.asarray(hi, dtype=float)
    if lo.shape != hi.shape or lo.ndim != 1:
        raise ValueError("lo and hi must be one-dimensional arrays of equal length")
    if np.any(hi < lo) or not (np.all(np.isfinite(lo)) and np.all(np.isfinite(hi))):
        raise ValueError("Batch limits must be finite with hi >= lo")
    count = lo.size

    def rule(owner, a, b):
        half = 0.5 * (b - a)
        center = 0.5 * (a + b)
        x = center[:, None] + half[:, None] * NODES[None, :]
        values = np.asarray(
            f(x.ravel(), np.repeat(owner, NODES.size)), dtype=float
        ).reshape(x.shape)
        kronrod = half * (values @ KRONROD_WEIGHTS)
        gauss = half * (values @ GAUSS_WEIGHTS)
        return kronrod, np.abs(kronrod - gauss)

    active = hi > lo
    owner = np.flatnonzero(active)
    a = lo[active]
    b = hi[active]
    kronrod, error = rule(owner, a, b)
    splits = np.zeros(count, dtype=int)
    exhausted = np.zeros(count, dtype=bool)

    while True:
        value = np.bincount(owner, weights=kronrod, minlength=count)
        total_error = np.bincount(owner, weights=error, minlength=count)
        target = np.maximum(spec.abs_tol, spec.rel_tol * np.abs(value))
        pending = (total_error > target) & ~exhausted
        if not pending.any():
            break
        worst = np.zeros(count)
        np.maximum.at(worst, owner, error)
        split = pending[owner] & (error >= 0.25 * worst[owner])
        np.add.at(splits, owner[split], 1)
        exhausted |= splits >= spec.max_subdivisions

        mid = 0.5 * (a[split] + b[split])
        child_owner = np.concatenate([owner[split], owner[split]])
        child_a = np.concatenate([a[split], mid])
        child_b = np.concatenate([mid, b[split]])
        child_kronrod, child_error = rule(child_owner, child_a, child_b)

        keep = ~split
        owner = np.concatenate([owner[keep], child_owner])
        a = np.concatenate([a[keep], child_a])
        b = np.concatenate([b[keep], child_b])
        kronrod = np.concatenate([kronrod[keep], child_kronrod])
        error = np.concatenate([error[keep], child_error])

    converged = total_error <= target
    if not converged.all():
        logging.debug(
            f"Batch quadrature left {int((~converged).sum())} of {count} integrals unconverged"
        )
    return value, total_error, converged
