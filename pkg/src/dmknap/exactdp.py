"""Exact pseudo-polynomial solvers for bounded standard-form ILPs.

After moving the origin to the floor of an LP vertex optimum, an optimal
integer point lies within l1 distance ``radius`` of the origin.  Two dynamic
programs search that ball:

* ``solve_levels``: longest path over states (k, h, l), where h is the partial
  image A[:, :k] x and l the l1 budget already spent.  With ``binarized=True``
  each item's multiplicity range is split into O(log) 0/1 steps.
* ``solve_paths``: longest path over pairs (k, h).  For each item the points
  along direction A_k form disjoint chains, and every chain is processed with
  a sliding-window maximum in O(chain length).

Negative shifted lower bounds are handled directly: each item's move z is
split into a nonnegative and a nonpositive half, and the budget is charged
|z|.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field

from .core import (
    KnapsackInstance,
    SolveReport,
    StandardFormInstance,
    check,
    delta,
    matvec,
    proximity_bound,
)
from .ratlp import LpVertexSolution, solve_relaxation_standard

NEG = float("-inf")


class LpInfeasible(ValueError):
    pass


class RecurrenceMismatch(AssertionError):
    pass


# -- max-queue ---------------------------------------------------------------

class MaxQueue:
    """FIFO queue with an amortised O(1) maximum query (monotone deque)."""

    def __init__(self):
        self._mono = deque()  # (item, seq), values non-increasing
        self._head = 0
        self._tail = 0

    def __len__(self):
        return self._tail - self._head

    def enque(self, item) -> None:
        mono = self._mono
        while mono and mono[-1][0] <= item:
            mono.pop()
        mono.append((item, self._tail))
        self._tail += 1

    def decue(self) -> None:
        if not len(self):
            raise IndexError("decue from an empty queue")
        if self._mono[0][1] == self._head:
            self._mono.popleft()
        self._head += 1

    def get_max(self):
        if not len(self):
            raise IndexError("get_max of an empty queue")
        return self._mono[0][0]


# -- binarisation ------------------------------------------------------------

def binarize_range(cap: int) -> tuple[int, ...]:
    """Steps 1, 2, ..., 2^(p-1), cap - 2^p + 1 whose 0/1 sums cover [0, cap]."""
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    p = (cap + 1).bit_length() - 1
    steps = [1 << i for i in range(p)]
    rest = cap - (1 << p) + 1
    if rest > 0:
        steps.append(rest)
    return tuple(steps)


# -- standard form and shift -------------------------------------------------

def to_standard_form(instance: KnapsackInstance) -> StandardFormInstance:
    """Append an identity block of slack columns with bounds [0, b_i]."""
    m, n = instance.m, instance.n
    A = [list(row) + [int(i == k) for k in range(m)] for i, row in enumerate(instance.A)]
    return StandardFormInstance(
        A,
        instance.b,
        tuple(instance.c) + (0,) * m,
        (0,) * (n + m),
        tuple(instance.u) + tuple(instance.b),
    )


@dataclass(frozen=True)
class ShiftedInstance:
    """The problem in coordinates x' = x - floor(x*) around an LP vertex x*."""

    base: StandardFormInstance
    floor_x: tuple[int, ...]
    lo: tuple[int, ...]
    up: tuple[int, ...]
    b: tuple[int, ...]
    radius: int
    delta: int
    lp: LpVertexSolution = field(compare=False)

    @property
    def A(self):
        return self.base.A

    @property
    def c(self):
        return self.base.c

    @property
    def m(self) -> int:
        return self.base.m

    @property
    def n(self) -> int:
        return self.base.n

    def unshift(self, xs) -> tuple[int, ...]:
        return tuple(a + f for a, f in zip(xs, self.floor_x))

    def offset(self) -> int:
        return self.base.objective(self.floor_x)


def shift(instance: StandardFormInstance, radius_override: int | None = None) -> ShiftedInstance:
    check(instance)
    lp = solve_relaxation_standard(instance)
    if lp.status != "optimal":
        raise LpInfeasible("LP relaxation is infeasible")
    fl = tuple(v.numerator // v.denominator for v in lp.x)
    d = delta(instance.A)
    radius = proximity_bound(instance.m, d) + instance.m if radius_override is None else radius_override
    return ShiftedInstance(
        base=instance,
        floor_x=fl,
        lo=tuple(l - f for l, f in zip(instance.lo, fl)),
        up=tuple(h - f for h, f in zip(instance.up, fl)),
        b=tuple(bi - ai for bi, ai in zip(instance.b, matvec(instance.A, fl))),
        radius=radius,
        delta=d,
        lp=lp,
    )


def _move_ranges(sh: ShiftedInstance):
    R = sh.radius
    return [(max(l, -R), min(h, R)) for l, h in zip(sh.lo, sh.up)]


def _suffix_windows(sh: ShiftedInstance, ranges):
    """windows[k][i] = (min, max) of row i of A[:, k:] z over the move box."""
    m, n = sh.m, sh.n
    windows = [None] * (n + 1)
    cur = [(0, 0)] * m
    windows[n] = tuple(cur)
    for k in range(n - 1, -1, -1):
        lo, up = ranges[k]
        col = sh.base.column(k)
        cur = [(a + min(col[i] * lo, col[i] * up), b + max(col[i] * lo, col[i] * up))
               for i, (a, b) in enumerate(cur)]
        windows[k] = tuple(cur)
    return windows


def _can_finish(h, target, window) -> bool:
    return all(lo <= t - hi <= up for hi, t, (lo, up) in zip(h, target, window))


def _add(h, col, z):
    return tuple(hi + z * a for hi, a in zip(h, col))


# -- triplet DAG -------------------------------------------------------------

def solve_levels(sh: ShiftedInstance, binarized: bool = False, prune: bool = True) -> SolveReport:
    """Longest path over (k, h, l) states, materialised on the fly in dicts.

    Any terminal (n, b', l) with l <= radius is accepted.  With ``prune`` a
    state is dropped as soon as the remaining columns cannot bring h to b'.
    """
    t0 = time.perf_counter()
    R = sh.radius
    m, n = sh.m, sh.n
    ranges = _move_ranges(sh)
    windows = _suffix_windows(sh, ranges) if prune else None
    zero = (0,) * m
    states = {(zero, 0): 0}
    parents = []  # per item: list of per-step dicts key -> (prev_key, z)
    n_states, arcs, max_h = 1, 0, 1
    for k in range(n):
        col = sh.base.column(k)
        ck = sh.c[k]
        lo, up = ranges[k]
        if binarized:
            steps = [(s, 1) for s in binarize_range(max(up, 0))]
            steps += [(s, -1) for s in binarize_range(max(-lo, 0))]
            level_parents = []
            for s, sign in steps:
                nxt = dict(states)
                par = {}
                for (h, l), v in states.items():
                    nl = l + s
                    if nl > R:
                        continue
                    arcs += 1
                    key = (_add(h, col, sign * s), nl)
                    val = v + sign * s * ck
                    old = nxt.get(key)
                    if old is None or val > old:
                        nxt[key] = val
                        par[key] = ((h, l), sign * s)
                states = nxt
                n_states += len(states)
                level_parents.append(par)
        else:
            nxt = {}
            par = {}
            for (h, l), v in states.items():
                room = R - l
                for z in range(max(lo, -room), min(up, room) + 1):
                    arcs += 1
                    key = (_add(h, col, z), l + abs(z))
                    val = v + z * ck
                    old = nxt.get(key)
                    if old is None or val > old:
                        nxt[key] = val
                        par[key] = ((h, l), z)
            states = nxt
            level_parents = [par]
        if prune:
            win = windows[k + 1]
            states = {key: v for key, v in states.items() if _can_finish(key[0], sh.b, win)}
        if not binarized:
            n_states += len(states)
        parents.append(level_parents)
        max_h = max(max_h, len({h for h, _ in states}))

    terminals = sorted((l, v) for (h, l), v in states.items() if h == sh.b)
    stats = {"states": n_states, "arcs": arcs, "max_h_per_level": max_h, "radius": R}
    mode = "exact-levels"
    if not terminals:
        stats["micros"] = int((time.perf_counter() - t0) * 1e6)
        return SolveReport(mode, "infeasible", stats=stats)
    best_l, best_v = max(terminals, key=lambda lv: (lv[1], -lv[0]))
    key = (sh.b, best_l)
    xs = [0] * n
    for k in range(n - 1, -1, -1):
        for par in reversed(parents[k]):
            hit = par.get(key)
            if hit is not None:
                key, z = hit
                xs[k] += z
    x = sh.unshift(xs)
    stats["micros"] = int((time.perf_counter() - t0) * 1e6)
    return SolveReport(mode, "optimal", best_v + sh.offset(), x, stats)


# -- pair DAG with chains ----------------------------------------------------

def longest_along_chain(f, cap: int, coef):
    """Window maxima g_i = max_{0 <= j <= min(cap, i-1)} f_{i-j} + coef * j.

    ``f`` lists the previous-level values along a chain h_1..h_t (``NEG`` for
    points that are not reachable).  Returns ``[(g_i, j_i)]`` with the
    maximising offset.  Runs in O(t) with a MaxQueue; queue items carry
    f_p + coef * (t - p) so that a single correction recovers g_i.
    """
    t = len(f)
    w = min(cap, t - 1)
    q = MaxQueue()
    for j in range(w + 1):
        p = t - j
        q.enque((f[p - 1] + coef * j, p))
    out = [None] * t
    for i in range(t, 0, -1):
        val, p = q.get_max()
        out[i - 1] = (val - coef * (t - i), i - p)
        q.decue()
        p = i - w - 1
        if p >= 1:
            q.enque((f[p - 1] + coef * (t - p), p))
    return out


def naive_longest_along_chain(f, cap: int, coef):
    """Direct evaluation of the window recurrence, for cross-checking."""
    return [max(f[i - j] + coef * j for j in range(min(cap, i) + 1)) for i in range(len(f))]


def _line_coords(h, d, g):
    pos = h[g] // d[g]
    return _add(h, d, -pos), pos


def chain_decomposition(points, d):
    """Split ``points`` into maximal chains p, p + d, p + 2d, ... (d != 0).

    Returns a list of chains, each a list of points in increasing order along
    ``d``; together they partition ``points``.
    """
    g = next(i for i, v in enumerate(d) if v != 0)
    lines: dict[tuple, list[int]] = {}
    for h in points:
        base, pos = _line_coords(h, d, g)
        lines.setdefault(base, []).append(pos)
    chains = []
    for base in sorted(lines):
        run = []
        for pos in sorted(lines[base]):
            if run and pos != run[-1] + 1:
                chains.append([_add(base, d, p) for p in run])
                run = []
            run.append(pos)
        chains.append([_add(base, d, p) for p in run])
    return chains


def _window_pass(src, d, cap, coef, counters, check_recurrence):
    """out[h] = (max_{0<=j<=cap, h-jd in src} src[h-jd] + coef*j, j)."""
    if cap < 0:
        return {}
    g = next(i for i, v in enumerate(d) if v != 0)
    # the vertex set: everything a source can reach, which is a union of runs
    span = set()
    for h in src:
        base, pos = _line_coords(h, d, g)
        span.update((base, p) for p in range(pos, pos + cap + 1))
    points = [_add(base, d, p) for base, p in span]
    out = {}
    for chain in chain_decomposition(points, d):
        f = [src.get(h, NEG) for h in chain]
        res = longest_along_chain(f, cap, coef)
        counters["chains"] += 1
        counters["chain_points"] += len(chain)
        if check_recurrence:
            naive = naive_longest_along_chain(f, cap, coef)
            if [v for v, _ in res] != naive:
                raise RecurrenceMismatch(f"window maxima disagree on chain of length {len(chain)}")
            counters["chains_checked"] += 1
        for h, (v, j) in zip(chain, res):
            if v != NEG:
                out[h] = (v, j)
    return out


def solve_paths(sh: ShiftedInstance, prune: bool = True, check_recurrence: bool = False) -> SolveReport:
    """Longest path over (k, h) pairs via chain-wise sliding-window maxima.

    Level sets keep only points whose minimal l1 cost is within the radius.
    Path values are compared lexicographically by (objective, -l1 norm), so
    the witness is a closest optimal point among those searched.
    """
    t0 = time.perf_counter()
    R = sh.radius
    m, n = sh.m, sh.n
    ranges = _move_ranges(sh)
    windows = _suffix_windows(sh, ranges) if prune else None
    # key = value * big - norm with 0 <= norm < big keeps both in one int
    big = sum(max(-lo, up) for lo, up in ranges) + 1
    zero = (0,) * m
    best = {zero: 0}
    minnorm = {zero: 0}
    choices = []
    counters = {"chains": 0, "chain_points": 0, "chains_checked": 0}
    n_states, max_h = 1, 1
    for k in range(n):
        col = sh.base.column(k)
        ck = sh.c[k]
        lo, up = ranges[k]
        if not any(col):
            zbest = max(range(lo, up + 1), key=lambda z: ck * z * big - abs(z))
            nb = {h: (v + ck * zbest * big - abs(zbest), zbest) for h, v in best.items()}
            nn = dict(minnorm)
        else:
            neg_col = tuple(-a for a in col)
            plus = _window_pass(best, col, up, ck * big - 1, counters, check_recurrence)
            minus = _window_pass(best, neg_col, -lo, -ck * big - 1, counters, check_recurrence)
            nb = {h: (v, j) for h, (v, j) in plus.items()}
            for h, (v, j) in minus.items():
                if h not in nb or v > nb[h][0]:
                    nb[h] = (v, -j)
            negnorm = {h: -v for h, v in minnorm.items()}
            nplus = _window_pass(negnorm, col, up, -1, counters, check_recurrence)
            nminus = _window_pass(negnorm, neg_col, -lo, -1, counters, check_recurrence)
            nn = {h: -v for h, (v, _) in nplus.items()}
            for h, (v, _) in nminus.items():
                nn[h] = min(nn.get(h, -v), -v)
        win = windows[k + 1] if prune else None
        keep = [h for h in nb if nn[h] <= R and (win is None or _can_finish(h, sh.b, win))]
        best = {h: nb[h][0] for h in keep}
        minnorm = {h: nn[h] for h in keep}
        choices.append({h: nb[h][1] for h in keep})
        n_states += len(keep)
        max_h = max(max_h, len(keep))

    stats = {"states": n_states, "max_h_per_level": max_h, "radius": R, **counters}
    mode = "exact-paths"
    if sh.b not in best:
        stats["micros"] = int((time.perf_counter() - t0) * 1e6)
        return SolveReport(mode, "infeasible", stats=stats)
    key = best[sh.b]
    value = -((-key) // big)
    xs = [0] * n
    h = sh.b
    for k in range(n - 1, -1, -1):
        z = choices[k][h]
        xs[k] = z
        h = _add(h, sh.base.column(k), -z)
    x = sh.unshift(xs)
    stats["micros"] = int((time.perf_counter() - t0) * 1e6)
    return SolveReport(mode, "optimal", value + sh.offset(), x, stats)


# -- front door --------------------------------------------------------------

def solve_exact(instance, variant: str = "paths", binarized: bool = False,
                radius_override: int | None = None, prune: bool = True,
                check_recurrence: bool = False) -> SolveReport:
    """Solve a knapsack or standard-form instance exactly.

    Knapsack instances are converted with slack columns; the reported witness
    is projected back onto the original variables.
    """
    if variant not in ("levels", "paths"):
        raise ValueError(f"unknown variant {variant!r}")
    check(instance)
    is_knapsack = isinstance(instance, KnapsackInstance)
    std = to_standard_form(instance) if is_knapsack else instance
    mode = f"exact-{variant}"
    try:
        sh = shift(std, radius_override)
    except LpInfeasible:
        return SolveReport(mode, "infeasible", stats={"lp_infeasible": True})
    if variant == "levels":
        rep = solve_levels(sh, binarized=binarized, prune=prune)
    else:
        rep = solve_paths(sh, prune=prune, check_recurrence=check_recurrence)
    rep.stats.update(delta=sh.delta, lp_pivots=sh.lp.stats["lp_pivots"])
    if rep.feasible:
        rep.stats["distance"] = sum(abs(a - f) for a, f in zip(rep.witness, sh.floor_x))
        assert std.is_feasible(rep.witness) and std.objective(rep.witness) == rep.value
        if is_knapsack:
            rep.witness = rep.witness[: instance.n]
    return rep
