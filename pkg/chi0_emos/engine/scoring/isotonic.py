import numpy as np

from chi0_emos.model.error.Dataset import EmptyInputException


def _pooled_ties(x: np.ndarray, y: np.ndarray):
    order = np.argsort(x, kind="stable")
    xs = x[order]
    starts = np.flatnonzero(np.concatenate([[True], xs[1:] != xs[:-1]]))
    sums = np.add.reduceat(y[order], starts)
    counts = np.diff(np.append(starts, xs.size))
    return order, xs, starts, sums.astype(float), counts.astype(float)


def _pool_adjacent_violators(sums: np.ndarray, counts: np.ndarray):
    """Merge adjacent blocks until block means are nondecreasing.

    Returns the block means and the number of input groups each block absorbed.
    """
    block_sum: list[float] = []
    block_count: list[float] = []
    block_groups: list[int] = []
    for s, c in zip(sums, counts):
        block_sum.append(float(s))
        block_count.append(float(c))
        block_groups.append(1)
        while len(block_sum) > 1 and (
            block_sum[-2] * block_count[-1] > block_sum[-1] * block_count[-2]
        ):
            s_last, c_last, g_last = block_sum.pop(), block_count.pop(), block_groups.pop()
            block_sum[-1] += s_last
            block_count[-1] += c_last
            block_groups[-1] += g_last
    means = np.array(block_sum) / np.array(block_count)
    return means, np.array(block_groups, dtype=int), np.array(block_count, dtype=int)


def pav_blocks(x, y) -> list[tuple[float, float, float, int]]:
    """Constant segments of the isotonic fit as (x_min, x_max, fitted value, count)."""
    x = np.asarray(x, dtype=float).ravel()
    y = np.asarray(y, dtype=float).ravel()
    if x.size == 0:
        raise EmptyInputException("Isotonic regression needs at least one pair")
    if x.size != y.size:
        raise ValueError(f"{x.size} forecasts for {y.size} outcomes")
    _, xs, starts, sums, counts = _pooled_ties(x, y)
    means, groups, sizes = _pool_adjacent_violators(sums, counts)
    group_edges = np.concatenate([[0], np.cumsum(groups)])
    ends = np.append(starts, xs.size)
    blocks = []
    for k, mean in enumerate(means):
        first = starts[group_edges[k]]
        last = ends[group_edges[k + 1]] - 1
        blocks.append((float(xs[first]), float(xs[last]), float(mean), int(sizes[k])))
    return blocks


def pav_isotonic(x, y) -> np.ndarray:
    """Isotonic least-squares fit of y on the order of x (pool adjacent violators).

    Equal forecast values are pooled into one block first, so the fit is a function
    of x. The fitted values are returned aligned with the input order; sorted by x
    they are nondecreasing, and they preserve the sum of y.

    Raises:
        EmptyInputException: If no pairs are given.
        ValueError: If x and y differ in length.
    """
    x = np.asarray(x, dtype=float).ravel()
    y = np.asarray(y, dtype=float).ravel()
    if x.size == 0:
        raise EmptyInputException("Isotonic regression needs at least one pair")
    if x.size != y.size:
        raise ValueError(f"{x.size} forecasts for {y.size} outcomes")
    order, _, _, sums, counts = _pooled_ties(x, y)
    means, groups, _ = _pool_adjacent_violators(sums, counts)
    per_group = np.repeat(means, groups)
    sorted_fit = np.repeat(per_group, counts.astype(int))
    fitted = np.empty_like(sorted_fit)
    fitted[order] = sorted_fit
    return fitted
