"""Delta-linear FPTAS: heavy/light split, dynamic programming by scaled costs
over reachable right-hand-side vectors, and greedy completion of light items.

All parameters are exact Fractions, so the (1 - eps) guarantee carries no
floating point slack.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from .core import KnapsackInstance, SolveReport, check
from .greedy import greedy_solve, preprocess


@dataclass(frozen=True)
class FptasParams:
    epsilon: Fraction
    alpha: Fraction
    beta: Fraction
    s: Fraction
    gamma: Fraction
    C: int
    heavy: tuple[int, ...]
    light: tuple[int, ...]

    @classmethod
    def build(cls, epsilon, m: int, c, greedy_value: int) -> "FptasParams":
        eps = Fraction(epsilon)
        alpha = eps / (2 * (m + 1))
        beta = alpha * alpha
        threshold = alpha * greedy_value
        heavy = tuple(i for i, ci in enumerate(c) if ci > threshold)
        light = tuple(i for i, ci in enumerate(c) if ci <= threshold)
        return cls(eps, alpha, beta, beta * greedy_value, (m + 1) / alpha,
                   ceil((m + 1) / beta), heavy, light)


def parse_epsilon(epsilon) -> Fraction:
    eps = Fraction(epsilon)
    if not 0 < eps < 1:
        raise ValueError(f"epsilon must lie in (0, 1), got {epsilon}")
    return eps


def scaled_costs(c, s, H) -> tuple[int, ...]:
    """floor(c_i / s) for i in H, computed exactly."""
    s = Fraction(s)
    if s == 0:
        raise ZeroDivisionError("scaling factor is zero (greedy value 0)")
    return tuple(floor(Fraction(c[i]) / s) for i in H)


class CostLevelTable:
    """DP(k, c0) cells for k = 0..K with parent links for witness recovery.

    ``levels[k][c0][y] = (l1_norm, parent_y, z)``: the smallest l1 norm of an
    x reaching ``(c0, y)`` with the first ``k`` items, and the last move.
    """

    def __init__(self, levels, w, cols):
        self.levels = levels
        self.w = w
        self.cols = cols

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def cell(self, k: int, c0: int) -> set:
        return set(self.levels[k].get(c0, ()))

    def costs(self, k: int | None = None) -> list[int]:
        k = self.depth if k is None else k
        return sorted(self.levels[k])

    def witness(self, k: int, c0: int, y) -> tuple[int, ...]:
        x = [0] * k
        y = tuple(y)
        for level in range(k, 0, -1):
            _, parent, z = self.levels[level][c0][y]
            x[level - 1] = z
            c0 -= z * self.w[level - 1]
            y = parent
        return tuple(x)

    def norm(self, k: int, c0: int, y) -> int:
        return self.levels[k][c0][tuple(y)][0]

    def n_states(self) -> int:
        return sum(len(cell) for level in self.levels for cell in level.values())

    def max_cell_size(self) -> int:
        return max(len(cell) for level in self.levels for cell in level.values())


def dp_by_costs(heavy: KnapsackInstance, w, C: int, gamma) -> CostLevelTable:
    """Reachable (c0, y) pairs of the heavy sub-problem with ||x||_1 <= floor(gamma)."""
    g = floor(Fraction(gamma))
    m = heavy.m
    b = heavy.b
    zero = (0,) * m
    levels = [{0: {zero: (0, None, 0)}}]
    for k in range(heavy.n):
        col = heavy.column(k)
        wk = w[k]
        zmax = min(g, heavy.u[k])
        nxt: dict[int, dict] = {}
        for c0p, cell in levels[-1].items():
            for yp, (normp, _, _) in cell.items():
                for z in range(0, zmax + 1):
                    norm = normp + z
                    c0 = c0p + z * wk
                    if norm > g or c0 > C:
                        break
                    y = tuple(yi + z * a for yi, a in zip(yp, col))
                    if any(yi > bi for yi, bi in zip(y, b)):
                        break
                    target = nxt.setdefault(c0, {})
                    old = target.get(y)
                    if old is None or norm < old[0]:
                        target[y] = (norm, yp, z)
        levels.append(nxt)
    return CostLevelTable(levels, tuple(w), [heavy.column(k) for k in range(heavy.n)])


def fptas_solve(instance: KnapsackInstance, epsilon) -> SolveReport:
    eps = parse_epsilon(epsilon)
    check(instance)
    t0 = time.perf_counter()
    inst = preprocess(instance)
    m, n = inst.m, inst.n
    gr = greedy_solve(inst)
    if gr.value == 0:
        # OPT <= (m+1) * 0
        return SolveReport("fptas", "optimal", 0, (0,) * n,
                           {"states": 0, "greedy_value": 0, "micros": _micros(t0)})

    p = FptasParams.build(eps, m, inst.c, gr.value)
    w = scaled_costs(inst.c, p.s, p.heavy)
    table = dp_by_costs(inst.subset(p.heavy), w, p.C, p.gamma)

    light_cache: dict[tuple, SolveReport] = {}
    best_val, best_x, scaled_value = -1, None, Fraction(-1)
    for c0 in table.costs():
        for y in table.levels[table.depth][c0]:
            xh = table.witness(table.depth, c0, y)
            if p.light:
                rhs = tuple(bi - yi for bi, yi in zip(inst.b, y))
                sub = light_cache.get(rhs)
                if sub is None:
                    sub = light_cache[rhs] = greedy_solve(inst.subset(p.light, rhs))
                q, xl = sub.value, sub.witness
            else:
                q, xl = 0, ()
            x = [0] * n
            for i, v in zip(p.heavy, xh):
                x[i] = v
            for i, v in zip(p.light, xl):
                x[i] = v
            val = inst.objective(x)
            scaled_value = max(scaled_value, p.s * c0 + q)
            if val > best_val:
                best_val, best_x = val, tuple(x)
    assert inst.is_feasible(best_x) and best_val >= scaled_value
    stats = {
        "states": table.n_states(),
        "max_cell": table.max_cell_size(),
        "heavy": len(p.heavy),
        "light": len(p.light),
        "greedy_value": gr.value,
        "greedy_calls": len(light_cache),
        "scaled_value": str(scaled_value),
        "micros": _micros(t0),
    }
    return SolveReport("fptas", "optimal", best_val, best_x, stats)


def _micros(t0: float) -> int:
    return int((time.perf_counter() - t0) * 1e6)
