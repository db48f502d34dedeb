"""Solver dispatch, seeded instance generation and the benchmark harness."""

from __future__ import annotations

import csv
import io as _io
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from pathlib import Path

from .core import KnapsackInstance, StandardFormInstance, check, delta, matvec, rank
from .exactdp import solve_exact
from .fptas import fptas_solve, parse_epsilon
from .greedy import greedy_solve
from .io import read_instance, serialize_instance
from .oracle import DEFAULT_CAP, OracleCapExceeded, brute_force_knapsack, brute_force_standard

BENCH_COLUMNS = ("id", "mode", "epsilon", "n", "m", "delta", "radius",
                 "value", "oracle", "states", "micros")


class ModeError(ValueError):
    """Mode cannot be applied to this instance or is missing a parameter."""


def solve(instance, mode: str, epsilon=None, radius: int | None = None,
          cap: int = DEFAULT_CAP, binarized: bool = False):
    """Run one solver by its mode name and return its SolveReport."""
    t0 = time.perf_counter()
    knapsack = isinstance(instance, KnapsackInstance)
    if mode in ("greedy", "fptas") and not knapsack:
        raise ModeError(f"mode {mode} needs a knapsack instance")
    if mode == "fptas":
        if epsilon is None:
            raise ModeError("mode fptas needs --epsilon")
        rep = fptas_solve(instance, parse_epsilon(epsilon))
    elif mode == "greedy":
        rep = greedy_solve(instance)
    elif mode == "exact-levels":
        rep = solve_exact(instance, "levels", binarized=binarized, radius_override=radius)
    elif mode == "exact-paths":
        rep = solve_exact(instance, "paths", radius_override=radius)
    elif mode == "oracle":
        rep = (brute_force_knapsack if knapsack else brute_force_standard)(instance, cap=cap)
    else:
        raise ModeError(f"unknown mode {mode!r}")
    rep.stats.setdefault("micros", int((time.perf_counter() - t0) * 1e6))
    return rep


def instance_delta(instance) -> int:
    return delta(instance.A) if rank(instance.A) else 0


# -- generation --------------------------------------------------------------

def random_knapsack(rng: random.Random, m, n, max_entry, max_u, max_c) -> KnapsackInstance:
    A = [[rng.randint(0, max_entry) for _ in range(n)] for _ in range(m)]
    u = [rng.randint(0, max_u) for _ in range(n)]
    c = [rng.randint(0, max_c) for _ in range(n)]
    b = [rng.randint(0, max(1, sum(a * x for a, x in zip(row, u)))) for row in A]
    return KnapsackInstance(A, b, c, u)


def random_standard(rng: random.Random, m, n, max_entry, max_u, max_c) -> StandardFormInstance:
    if n < m:
        raise ValueError("standard form needs n >= m")
    while True:
        A = [[rng.randint(-max_entry, max_entry) for _ in range(n)] for _ in range(m)]
        if rank(A) == m:
            break
    lo = [-rng.randint(0, max_u // 2) for _ in range(n)]
    up = [l + rng.randint(0, max_u) for l in lo]
    c = [rng.randint(-max_c, max_c) for _ in range(n)]
    x0 = [rng.randint(l, h) for l, h in zip(lo, up)]
    return StandardFormInstance(A, matvec(A, x0), c, lo, up)


def generate(seed: int, m: int, n: int, max_entry: int, max_u: int, max_c: int,
             count: int, kind: str = "knapsack") -> list[tuple[str, str]]:
    """Return ``count`` (file name, file text) pairs; identical per seed."""
    if min(m, n, max_entry, count) < 1 or min(max_u, max_c) < 0:
        raise ValueError("generator parameters must be positive")
    rng = random.Random(seed)
    make = {"knapsack": random_knapsack, "standard": random_standard}[kind]
    out = []
    for i in range(count):
        inst = make(rng, m, n, max_entry, max_u, max_c)
        meta = {"seed": seed, "index": i, "kind": kind, "m": m, "n": n,
                "max_entry": max_entry, "max_u": max_u, "max_c": max_c,
                "delta": instance_delta(inst)}
        out.append((f"{kind}_s{seed}_{i:04d}.json", serialize_instance(inst, meta)))
    return out


def delta_family(delta_value: int, n: int = 40, seed: int = 0, n_valuable: int = 10) -> KnapsackInstance:
    """Two-row knapsack with 0/1 columns plus a scaled 2x2 block.

    The first two columns are [[delta, 1], [0, 1]] and every other column is
    0/1, so Delta(A) = delta_value for delta_value >= 2.  The first
    ``n_valuable`` items cost 40..60 and the rest 1..2, which keeps the heavy
    set stable across delta.  b = (2 delta, 4); everything except the block
    and b is independent of delta.
    """
    rng = random.Random(seed)
    cols = [(delta_value, 0), (1, 1)]
    cols += [(rng.randint(0, 1), rng.randint(0, 1)) for _ in range(n - 2)]
    A = [[col[i] for col in cols] for i in range(2)]
    c = [rng.randint(40, 60) for _ in range(n_valuable)]
    c += [rng.randint(1, 2) for _ in range(n - n_valuable)]
    u = [rng.randint(1, 2) for _ in range(n)]
    return KnapsackInstance(A, [2 * delta_value, 4], c, u)


# -- benchmark ---------------------------------------------------------------

@dataclass
class BenchRecord:
    id: str
    mode: str
    epsilon: str
    n: int
    m: int
    delta: int
    radius: str
    value: str
    oracle: str
    states: str
    micros: str


def _bench_instance(args):
    path, modes, epsilons, cap = args
    ident = Path(path).stem
    try:
        instance, _ = read_instance(path)
        check(instance)
    except Exception as exc:  # recorded, run continues
        return [BenchRecord(ident, mode, "", 0, 0, 0, "", f"error:{exc}", "", "", "")
                for mode in modes]
    d = instance_delta(instance)
    try:
        oracle = str(solve(instance, "oracle", cap=cap).value)
    except OracleCapExceeded:
        oracle = ""
    records = []
    for mode in modes:
        for eps in (epsilons if mode == "fptas" else [None]):
            eps_s = "" if eps is None else str(Fraction(eps))
            try:
                rep = solve(instance, mode, epsilon=eps, cap=cap)
                value = "infeasible" if rep.value is None else str(rep.value)
                radius = str(rep.stats.get("radius", ""))
                states = str(rep.stats.get("states", ""))
                micros = str(rep.stats.get("micros", ""))
            except Exception as exc:
                value, radius, states, micros = f"error:{exc}", "", "", ""
            records.append(BenchRecord(ident, mode, eps_s, instance.n, instance.m, d,
                                       radius, value, oracle, states, micros))
    return records


def bench(corpus, modes, epsilons=(), cap: int = DEFAULT_CAP, jobs: int = 1) -> list[BenchRecord]:
    """One record per (instance, mode, epsilon), in sorted corpus order."""
    paths = sorted(Path(corpus).glob("*.json"))
    tasks = [(str(p), list(modes), list(epsilons), cap) for p in paths]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            chunks = list(pool.map(_bench_instance, tasks))
    else:
        chunks = [_bench_instance(t) for t in tasks]
    return [rec for chunk in chunks for rec in chunk]


def records_to_csv(records) -> str:
    buf = _io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=BENCH_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow(asdict(rec))
    return buf.getvalue()


def delta_trend(deltas=(2, 4, 8, 16), n: int = 40, epsilon=Fraction(1, 4), seed: int = 0,
                exact: bool = True) -> list[dict]:
    """DP state counts of the FPTAS (and the exact solver) on ``delta_family``."""
    rows = []
    for d in deltas:
        inst = delta_family(d, n=n, seed=seed)
        rep = fptas_solve(inst, epsilon)
        row = {"delta": d, "fptas_states": rep.stats["states"], "fptas_value": rep.value}
        if exact:
            ex = solve_exact(inst, "paths")
            row.update(exact_states=ex.stats["states"], exact_value=ex.value)
        rows.append(row)
    return rows
