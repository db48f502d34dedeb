"""Brute-force ground truth used to check every solver."""

from __future__ import annotations

from itertools import product
from math import prod

from .core import KnapsackInstance, SolveReport, StandardFormInstance, check, matvec

DEFAULT_CAP = 10**7


class OracleCapExceeded(RuntimeError):
    pass


def _guard(volume: int, cap: int) -> None:
    if volume > cap:
        raise OracleCapExceeded(f"search space {volume} exceeds cap {cap}")


def brute_force_knapsack(instance: KnapsackInstance, cap: int = DEFAULT_CAP,
                         order: str = "forward") -> SolveReport:
    """Exhaustive search with prefix pruning (valid because A >= 0).

    With ``order="forward"`` the lexicographically smallest maximiser is
    returned.  ``order="backward"`` walks each coordinate from its upper
    bound down; it exists as an independent second enumeration and may
    return a different maximiser of the same value.
    """
    check(instance)
    _guard(prod(u + 1 for u in instance.u), cap)
    m, n = instance.m, instance.n
    cols = [instance.column(j) for j in range(n)]
    b, c, u = instance.b, instance.c, instance.u
    best = [-1, None]
    x = [0] * n
    visited = 0

    def rec(j, load, value):
        nonlocal visited
        visited += 1
        if j == n:
            if value > best[0]:
                best[0], best[1] = value, tuple(x)
            return
        rng = range(u[j] + 1) if order == "forward" else range(u[j], -1, -1)
        col = cols[j]
        for z in rng:
            new = [load[i] + z * col[i] for i in range(m)]
            if any(new[i] > b[i] for i in range(m)):
                if order == "forward":
                    break  # larger z only makes it worse
                continue
            x[j] = z
            rec(j + 1, new, value + z * c[j])
        x[j] = 0

    rec(0, [0] * m, 0)
    return SolveReport("oracle", "optimal", best[0], best[1], {"visited": visited})


def brute_force_standard(instance: StandardFormInstance, cap: int = DEFAULT_CAP,
                         order: str = "forward") -> SolveReport:
    """Full enumeration of the box; no sign assumptions on the data."""
    check(instance)
    ranges = [range(l, h + 1) for l, h in zip(instance.lo, instance.up)]
    _guard(prod(len(r) for r in ranges), cap)
    if order == "backward":
        ranges = [r[::-1] for r in ranges]
    best_val, best_x = None, None
    visited = 0
    for x in product(*ranges):
        visited += 1
        if matvec(instance.A, x) != instance.b:
            continue
        v = instance.objective(x)
        if best_val is None or v > best_val:
            best_val, best_x = v, x
    if best_x is None:
        return SolveReport("oracle", "infeasible", stats={"visited": visited})
    return SolveReport("oracle", "optimal", best_val, best_x, {"visited": visited})


def enumerate_reachable(A, gamma, bounds, cap: int = DEFAULT_CAP) -> set[tuple[int, ...]]:
    """All images Ax for integer x in ``bounds`` with ||x||_1 <= gamma.

    ``bounds`` is a sequence of ``(lo, hi)`` pairs, one per column of ``A``.
    """
    bounds = list(bounds)
    _guard(prod(hi - lo + 1 for lo, hi in bounds), cap)
    m = len(A)
    cols = [tuple(row[j] for row in A) for j in range(len(bounds))]
    out = set()

    def rec(j, y, budget):
        if j == len(bounds):
            out.add(y)
            return
        lo, hi = bounds[j]
        col = cols[j]
        for z in range(max(lo, -budget), min(hi, budget) + 1):
            rec(j + 1, tuple(y[i] + z * col[i] for i in range(m)), budget - abs(z))

    if gamma >= 0:
        rec(0, (0,) * m, int(gamma))
    return out
