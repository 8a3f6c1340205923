import math
from typing import Callable

import numpy as np

from chi0_emos.model.error.Numerics import (
    InvalidBracketException,
    RootConvergenceException,
)

MAX_ITERATIONS = 200


def find_root(
    g: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-10,
    max_iter: int = MAX_ITERATIONS,
) -> float:
    """Locate a sign change of a continuous function inside [lo, hi].

    Secant steps are tried on every other iteration and accepted only when they
    land strictly inside the current bracket; the remaining iterations bisect, so
    the bracket width at least halves every two iterations.

    Args:
        g (Callable[[float], float]): Continuous function with g(lo) * g(hi) <= 0.
        lo (float): Left end of the bracket.
        hi (float): Right end of the bracket.
        tol (float, optional): Target bracket width. Defaults to 1e-10.
        max_iter (int, optional): Iteration budget. Defaults to 200.

    Returns:
        float: A point of the final bracket of width <= tol.

    Raises:
        InvalidBracketException: If g does not change sign on [lo, hi].
        RootConvergenceException: If the bracket is still wider than tol after
            `max_iter` iterations.
    """
    a, b = float(lo), float(hi)
    if a > b:
        a, b = b, a
    ga, gb = float(g(a)), float(g(b))
    if math.isnan(ga) or math.isnan(gb) or ga * gb > 0.0:
        raise InvalidBracketException(
            f"g does not change sign on [{a}, {b}] (g(lo)={ga}, g(hi)={gb})"
        )
    if ga == 0.0:
        return a
    if gb == 0.0:
        return b

    for iteration in range(max_iter):
        if b - a <= tol:
            return a if abs(ga) <= abs(gb) else b
        x = 0.5 * (a + b)
        if iteration % 2 == 0 and gb != ga:
            secant = b - gb * (b - a) / (gb - ga)
            if a < secant < b:
                x = secant
        gx = float(g(x))
        if gx == 0.0:
            return x
        if (gx < 0.0) == (ga < 0.0):
            a, ga = x, gx
        else:
            b, gb = x, gx
    if b - a <= tol:
        return a if abs(ga) <= abs(gb) else b
    raise RootConvergenceException(
        f"Root bracket [{a}, {b}] still wider than {tol} after {max_iter} iterations"
    )


def find_roots_batch(
    g: Callable[[np.ndarray, np.ndarray], np.ndarray],
    lo: np.ndarray,
    hi: np.ndarray,
    tol: float = 1e-10,
) -> np.ndarray:
    """Vectorised bisection for many increasing functions at once.

    `g(x, index)` evaluates function `index[k]` at `x[k]`; each function must be
    nondecreasing with g(lo) <= 0 <= g(hi) on its own bracket.
    """
    a = np.array(lo, dtype=float)
    b = np.array(hi, dtype=float)
    index = np.arange(a.size)
    width = float(np.max(b - a)) if a.size else 0.0
    if width <= tol:
        return 0.5 * (a + b)
    steps = min(MAX_ITERATIONS, int(math.ceil(math.log2(width / tol))) + 1)
    for _ in range(steps):
        mid = 0.5 * (a + b)
        below = np.asarray(g(mid, index)) < 0.0
        a = np.where(below, mid, a)
        b = np.where(below, b, mid)
    return 0.5 * (a + b)
