"""LP-rounding greedy with a 1/(m+1) approximation guarantee."""

from __future__ import annotations

from math import floor

from .core import KnapsackInstance, SolveReport, check
from .ratlp import solve_relaxation


def preprocess(instance: KnapsackInstance) -> KnapsackInstance:
    """Zero the bound of every item whose single unit does not fit into b.

    With A >= 0 such an item can never be used, so the optimum is unchanged;
    afterwards every remaining item is feasible on its own.
    """
    u = list(instance.u)
    for j in range(instance.n):
        if any(a > bi for a, bi in zip(instance.column(j), instance.b)):
            u[j] = 0
    return KnapsackInstance(instance.A, instance.b, instance.c, u)


def greedy_solve(instance: KnapsackInstance) -> SolveReport:
    check(instance)
    inst = preprocess(instance)
    lp = solve_relaxation(inst)
    y = tuple(floor(v) for v in lp.x)
    value = inst.objective(y)
    witness = y
    for i in lp.fractional_set:
        # strict: ties go to the rounded vector
        if inst.c[i] > value:
            value = inst.c[i]
            witness = tuple(int(k == i) for k in range(inst.n))
    assert inst.is_feasible(witness)
    stats = {"lp_pivots": lp.stats["lp_pivots"], "fractional": len(lp.fractional_set)}
    return SolveReport("greedy", "optimal", value, witness, stats)
