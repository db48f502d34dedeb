from itertools import product

import pytest

from conftest import knapsack_suite, standard_suite
from dmknap import KnapsackInstance, StandardFormInstance, delta, rank
from dmknap.core import matvec, reachable_count_bound
from dmknap.oracle import (
    OracleCapExceeded,
    brute_force_knapsack,
    brute_force_standard,
    enumerate_reachable,
)

TRIANGLE = [[1, 1, 0], [1, 0, 1], [0, 1, 1]]


def test_e2(e2):
    rep = brute_force_knapsack(e2)
    assert rep.value == 9 and rep.witness == (0, 1, 1)


def test_zero_rhs():
    assert brute_force_knapsack(KnapsackInstance([[1]], [0], [1], [1])).value == 0


def test_zero_bounds():
    rep = brute_force_knapsack(KnapsackInstance([[1, 2]], [5], [3, 4], [0, 0]))
    assert rep.value == 0 and rep.witness == (0, 0)


def test_cap():
    inst = KnapsackInstance([[1] * 10], [5], [1] * 10, [9] * 10)
    with pytest.raises(OracleCapExceeded):
        brute_force_knapsack(inst, cap=1000)


def test_lexicographic_witness():
    inst = KnapsackInstance([[1, 1]], [1], [1, 1], [1, 1])
    assert brute_force_knapsack(inst).witness == (0, 1)


def test_standard_examples():
    rep = brute_force_standard(StandardFormInstance([[1, 1]], [3], [1, 0], [0, 0], [2, 2]))
    assert rep.value == 2 and rep.witness == (2, 1)
    assert brute_force_standard(StandardFormInstance([[2]], [3], [1], [0], [5])).status == "infeasible"


def test_forced_point():
    A = [[1, 2, -1], [0, 1, 1]]
    lo = (1, -1, 0)
    inst = StandardFormInstance(A, matvec(A, lo), [-1, -1, -1], lo, (3, 2, 2))
    rep = brute_force_standard(inst)
    assert rep.feasible


def test_forced_point_single():
    inst = StandardFormInstance([[3]], [6], [1], [2], [2])
    rep = brute_force_standard(inst)
    assert rep.witness == (2,) and rep.value == 2


def test_orders_agree_knapsack():
    for inst in knapsack_suite(200, seed=11):
        assert brute_force_knapsack(inst).value == brute_force_knapsack(inst, order="backward").value


def test_orders_agree_standard():
    for inst in standard_suite(150, seed=12):
        a = brute_force_standard(inst)
        b = brute_force_standard(inst, order="backward")
        assert a.status == b.status and a.value == b.value


def test_pruned_search_matches_full_enumeration():
    for inst in knapsack_suite(100, seed=13, max_n=4):
        best = max(inst.objective(x) for x in product(*(range(u + 1) for u in inst.u))
                   if inst.is_feasible(x))
        assert brute_force_knapsack(inst).value == best


class TestReachable:
    def test_identity(self):
        pts = enumerate_reachable([[1, 0], [0, 1]], 1, [(0, 1), (0, 1)])
        assert pts == {(0, 0), (1, 0), (0, 1)}
        assert len(pts) <= reachable_count_bound(2, 1, 1) == 16

    def test_triangle(self):
        pts = enumerate_reachable(TRIANGLE, 2, [(0, 1)] * 3)
        brute = {matvec(TRIANGLE, x) for x in product((0, 1), repeat=3) if sum(x) <= 2}
        assert pts == brute
        assert len(pts) <= reachable_count_bound(3, 2, 2) == 432

    def test_gamma_zero(self):
        assert enumerate_reachable([[3, 1], [2, 5]], 0, [(-2, 2)] * 2) == {(0, 0)}

    def test_ball_walk_matches_box_filter(self):
        A = [[1, -2, 3], [0, 1, 1]]
        bounds = [(-2, 1), (0, 2), (-1, 1)]
        for gamma in range(5):
            brute = {matvec(A, x) for x in product(*(range(l, h + 1) for l, h in bounds))
                     if sum(map(abs, x)) <= gamma}
            assert enumerate_reachable(A, gamma, bounds) == brute

    def test_counting_bound_small(self):
        import random

        rng = random.Random(2)
        for _ in range(40):
            m, n = rng.randint(1, 2), rng.randint(1, 3)
            A = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(m)]
            if rank(A) == 0:
                continue
            gamma = rng.randint(1, 3)
            pts = enumerate_reachable(A, gamma, [(-gamma, gamma)] * n)
            assert len(pts) <= reachable_count_bound(m, gamma, delta(A))
