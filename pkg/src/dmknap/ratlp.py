"""Exact LP relaxations via a bounded-variable primal simplex over Fractions.

Both relaxations are reduced to the same core problem

    max c.x  s.t.  A x = b,  lo <= x <= up   (up may be None = +inf)

and solved with a two-phase method.  Nonbasic variables sit at one of their
bounds, so every returned point is a vertex and at most ``m`` coordinates lie
strictly between their bounds.  Bland's smallest-index rule is used for both
the entering and the leaving variable, which rules out cycling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import KnapsackInstance, StandardFormInstance


@dataclass
class LpVertexSolution:
    status: str
    x: tuple[Fraction, ...] | None = None
    objective: Fraction | None = None
    fractional_set: tuple[int, ...] = ()
    stats: dict = field(default_factory=dict)


class UnboundedLP(RuntimeError):
    pass


def _invert(B):
    """Inverse of a small square Fraction matrix by Gauss-Jordan."""
    k = len(B)
    a = [list(row) + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(B)]
    for col in range(k):
        piv = next(r for r in range(col, k) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [v / p for v in a[col]]
        for r in range(k):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [row[k:] for row in a]


class _BoundedSimplex:
    def __init__(self, A, b, lo, up):
        self.m = len(A)
        self.A = [[Fraction(v) for v in row] for row in A]
        self.b = [Fraction(v) for v in b]
        self.lo = [Fraction(v) for v in lo]
        self.up = [None if v is None else Fraction(v) for v in up]
        self.ncols = len(lo)
        self.pivots = 0

    def col(self, j):
        return [row[j] for row in self.A]

    def basic_values(self, basis, xN):
        rhs = [bi - sum(row[j] * xN[j] for j in xN) for bi, row in zip(self.b, self.A)]
        Binv = _invert([[row[j] for j in basis] for row in self.A])
        return Binv, [sum(r * v for r, v in zip(Brow, rhs)) for Brow in Binv]

    def run(self, c, basis, xN):
        """Optimise ``c`` from the basis ``basis``; ``xN`` maps nonbasic -> value."""
        while True:
            Binv, xB = self.basic_values(basis, xN)
            cB = [c[j] for j in basis]
            y = [sum(cB[i] * Binv[i][r] for i in range(self.m)) for r in range(self.m)]
            enter = None
            for j in sorted(xN):
                if self.up[j] is not None and self.up[j] == self.lo[j]:
                    continue
                d = c[j] - sum(yi * aij for yi, aij in zip(y, self.col(j)))
                if d > 0 and xN[j] == self.lo[j]:
                    enter, sgn = j, 1
                    break
                if d < 0 and xN[j] != self.lo[j]:
                    enter, sgn = j, -1
                    break
            if enter is None:
                x = dict(xN)
                x.update(zip(basis, xB))
                return basis, xN, x
            # basic values move by -sgn * alpha * t
            alpha = [sum(Brow[r] * aj for r, aj in enumerate(self.col(enter))) for Brow in Binv]
            step = None
            leave = None  # (index in basis, bound it goes to) or 'flip'
            if self.up[enter] is not None:
                step = self.up[enter] - self.lo[enter]
                leave = ("flip", enter)
            for i, bj in enumerate(basis):
                rate = -sgn * alpha[i]
                if rate < 0:
                    t = (xB[i] - self.lo[bj]) / -rate
                    target = self.lo[bj]
                elif rate > 0 and self.up[bj] is not None:
                    t = (self.up[bj] - xB[i]) / rate
                    target = self.up[bj]
                else:
                    continue
                if step is None or t < step or (t == step and bj < leave[1]):
                    step, leave = t, (i, bj, target)
            if step is None:
                raise UnboundedLP("LP relaxation is unbounded")
            self.pivots += 1
            if leave[0] == "flip":
                xN[enter] = self.up[enter] if sgn > 0 else self.lo[enter]
                continue
            i, bj, target = leave
            del xN[enter]
            basis[i] = enter
            xN[bj] = target


def solve_bounded(A, b, c, lo, up):
    """Solve max c.x s.t. Ax = b, lo <= x <= up exactly.

    Returns ``(status, x, pivots)`` with ``x`` a list of Fractions.
    """
    m = len(A)
    n = len(c)
    # nonbasic structurals start at their lower bound; artificials absorb the residual
    start = [Fraction(v) for v in lo]
    resid = [Fraction(bi) - sum(Fraction(a) * s for a, s in zip(row, start)) for bi, row in zip(b, A)]
    signs = [1 if r >= 0 else -1 for r in resid]
    A_ext = [list(row) + [signs[i] if k == i else 0 for k in range(m)] for i, row in enumerate(A)]
    lo_ext = list(lo) + [0] * m
    up_ext = list(up) + [None] * m
    lp = _BoundedSimplex(A_ext, b, lo_ext, up_ext)
    basis = list(range(n, n + m))
    xN = {j: start[j] for j in range(n)}
    phase1 = [Fraction(0)] * n + [Fraction(-1)] * m
    basis, xN, x = lp.run(phase1, basis, xN)
    if any(x[n + i] != 0 for i in range(m)):
        return "infeasible", None, lp.pivots
    for k in range(n, n + m):
        lp.up[k] = Fraction(0)
        if k in xN:
            xN[k] = Fraction(0)
    phase2 = [Fraction(v) for v in c] + [Fraction(0)] * m
    basis, xN, x = lp.run(phase2, basis, xN)
    return "optimal", [x[j] for j in range(n)], lp.pivots


def _package(status, x, c, pivots):
    if status != "optimal":
        return LpVertexSolution(status="infeasible", stats={"lp_pivots": pivots})
    x = tuple(x)
    obj = sum(Fraction(ci) * xi for ci, xi in zip(c, x))
    frac = tuple(i for i, v in enumerate(x) if v.denominator != 1)
    return LpVertexSolution("optimal", x, obj, frac, {"lp_pivots": pivots})


def solve_relaxation(instance: KnapsackInstance) -> LpVertexSolution:
    """Vertex optimum of max c.x over {Ax <= b, 0 <= x <= u}."""
    m, n = instance.m, instance.n
    A = [list(row) + [int(k == i) for k in range(m)] for i, row in enumerate(instance.A)]
    lo = [0] * (n + m)
    up = list(instance.u) + [None] * m
    c = list(instance.c) + [0] * m
    status, x, pivots = solve_bounded(A, instance.b, c, lo, up)
    return _package(status, None if x is None else x[:n], instance.c, pivots)


def solve_relaxation_standard(instance: StandardFormInstance) -> LpVertexSolution:
    """Vertex optimum of max c.x over {Ax = b, lo <= x <= up}, or infeasible."""
    status, x, pivots = solve_bounded(instance.A, instance.b, instance.c, instance.lo, instance.up)
    return _package(status, x, instance.c, pivots)
