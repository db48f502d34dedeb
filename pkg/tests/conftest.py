import random

import pytest

from dmknap import KnapsackInstance, StandardFormInstance
from dmknap.harness import random_knapsack, random_standard

_ACCEPTANCE = []


def record(criterion, ok, detail):
    _ACCEPTANCE.append((criterion, ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok, detail in sorted(_ACCEPTANCE, key=lambda r: r[0]):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}")


@pytest.fixture
def acceptance_record():
    return record


@pytest.fixture
def e2():
    return KnapsackInstance([[3, 4, 5]], [10], [3, 4, 5], [1, 1, 1])


@pytest.fixture
def small_lp():
    return KnapsackInstance([[2, 3]], [4], [2, 3], [1, 1])


def knapsack_suite(count, seed, max_n=6, ms=(1, 2, 3)):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        m = rng.choice(ms)
        n = rng.randint(1, max_n)
        out.append(random_knapsack(rng, m, n, max_entry=4, max_u=3, max_c=5))
    return out


def standard_suite(count, seed, max_n=6):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        m = rng.choice((1, 2, 3))
        n = rng.randint(m, max_n)
        inst = random_standard(rng, m, n, max_entry=4, max_u=3, max_c=5)
        if rng.random() < 0.25:
            # arbitrary rhs, often infeasible
            inst = StandardFormInstance(inst.A, [rng.randint(-6, 6) for _ in range(m)],
                                        inst.c, inst.lo, inst.up)
        out.append(inst)
    return out
