import random
from fractions import Fraction
from itertools import combinations

import pytest

from dmknap import KnapsackInstance, StandardFormInstance, rank, solve_relaxation, solve_relaxation_standard
from dmknap.harness import random_knapsack, random_standard


def solve_square(M, rhs):
    """Fraction Gauss elimination; None when singular."""
    k = len(M)
    a = [[Fraction(v) for v in row] + [Fraction(r)] for row, r in zip(M, rhs)]
    for col in range(k):
        piv = next((r for r in range(col, k) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        for r in range(k):
            if r != col and a[r][col] != 0:
                f = a[r][col] / a[col][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][k] / a[i][i] for i in range(k)]


def constraints_knapsack(inst):
    """Rows (coefficients, rhs) of the relaxation written as g.x <= h."""
    n = inst.n
    rows = [(list(r), bi) for r, bi in zip(inst.A, inst.b)]
    rows += [([-int(i == j) for j in range(n)], 0) for i in range(n)]
    rows += [([int(i == j) for j in range(n)], ui) for i, ui in enumerate(inst.u)]
    return rows


def vertex_oracle_knapsack(inst):
    rows = constraints_knapsack(inst)
    best = None
    for act in combinations(rows, inst.n):
        x = solve_square([g for g, _ in act], [h for _, h in act])
        if x is None or any(sum(gi * xi for gi, xi in zip(g, x)) > h for g, h in rows):
            continue
        v = sum(ci * xi for ci, xi in zip(inst.c, x))
        best = v if best is None else max(best, v)
    return best


def vertex_oracle_standard(inst):
    n, m = inst.n, inst.m
    bounds = [([int(i == j) for j in range(n)], lo) for i, lo in enumerate(inst.lo)]
    bounds += [([int(i == j) for j in range(n)], up) for i, up in enumerate(inst.up)]
    best = None
    for act in combinations(bounds, n - m):
        M = [list(r) for r in inst.A] + [g for g, _ in act]
        x = solve_square(M, list(inst.b) + [h for _, h in act])
        if x is None or any(not l <= xi <= u for xi, l, u in zip(x, inst.lo, inst.up)):
            continue
        v = sum(ci * xi for ci, xi in zip(inst.c, x))
        best = v if best is None else max(best, v)
    return best


def assert_vertex_knapsack(inst, sol):
    x = sol.x
    rows = constraints_knapsack(inst)
    for g, h in rows:
        assert sum(gi * xi for gi, xi in zip(g, x)) <= h
    active = [g for g, h in rows if sum(gi * xi for gi, xi in zip(g, x)) == h]
    assert rank(active) == inst.n
    assert sol.objective == sum(ci * xi for ci, xi in zip(inst.c, x))
    assert len(sol.fractional_set) <= inst.m
    assert sol.fractional_set == tuple(i for i, v in enumerate(x) if v.denominator != 1)


class TestKnapsackRelaxation:
    def test_one_fractional(self, small_lp):
        sol = solve_relaxation(small_lp)
        assert sol.status == "optimal"
        assert sol.objective == 4 == vertex_oracle_knapsack(small_lp)
        assert sol.x in {(1, Fraction(2, 3)), (Fraction(1, 2), 1)}
        assert len(sol.fractional_set) == 1

    def test_box_binds(self):
        sol = solve_relaxation(KnapsackInstance([[1]], [5], [1], [3]))
        assert sol.x == (3,) and sol.objective == 3 and sol.fractional_set == ()

    def test_zero_rhs(self):
        sol = solve_relaxation(KnapsackInstance([[1, 1]], [0], [1, 1], [1, 1]))
        assert sol.x == (0, 0) and sol.objective == 0

    def test_random_against_vertex_enumeration(self):
        rng = random.Random(3)
        for _ in range(150):
            inst = random_knapsack(rng, rng.choice((1, 2)), rng.randint(1, 4), 4, 3, 5)
            sol = solve_relaxation(inst)
            assert sol.objective == vertex_oracle_knapsack(inst)
            assert_vertex_knapsack(inst, sol)

    def test_fractional_count_at_most_m(self):
        rng = random.Random(4)
        for _ in range(200):
            inst = random_knapsack(rng, rng.choice((1, 2, 3)), rng.randint(1, 8), 5, 3, 5)
            sol = solve_relaxation(inst)
            assert_vertex_knapsack(inst, sol)

    def test_degenerate_corpus_terminates(self):
        # zero rhs rows and duplicated columns make many ties in the ratio test
        cases = [
            KnapsackInstance([[1, 1, 1], [1, 1, 1]], [0, 0], [1, 1, 1], [2, 2, 2]),
            KnapsackInstance([[2, 2, 1], [1, 1, 2], [0, 0, 0]], [0, 4, 0], [3, 3, 1], [1, 1, 1]),
            KnapsackInstance([[1, 2, 3, 4], [4, 3, 2, 1]], [0, 5], [1, 2, 3, 4], [3, 3, 3, 3]),
            KnapsackInstance([[1, 1], [1, 1], [1, 1]], [2, 2, 2], [1, 1], [2, 2]),
        ]
        for inst in cases:
            sol = solve_relaxation(inst)
            assert sol.objective == vertex_oracle_knapsack(inst)
            assert_vertex_knapsack(inst, sol)


class TestStandardRelaxation:
    def test_example(self):
        sol = solve_relaxation_standard(StandardFormInstance([[1, 1]], [3], [1, 0], [0, 0], [2, 2]))
        assert sol.x == (2, 1) and sol.objective == 2

    def test_infeasible(self):
        sol = solve_relaxation_standard(StandardFormInstance([[1]], [7], [1], [0], [3]))
        assert sol.status == "infeasible"

    def test_difference_row(self):
        sol = solve_relaxation_standard(StandardFormInstance([[1, -1]], [0], [1, 0], [0, 0], [1, 1]))
        assert sol.x == (1, 1) and sol.objective == 1

    def test_random_against_vertex_enumeration(self):
        rng = random.Random(5)
        seen_infeasible = 0
        for _ in range(200):
            m = rng.choice((1, 2))
            inst = random_standard(rng, m, rng.randint(m, 4), 4, 3, 5)
            if rng.random() < 0.3:
                inst = StandardFormInstance(inst.A, [rng.randint(-8, 8) for _ in range(m)],
                                            inst.c, inst.lo, inst.up)
            sol = solve_relaxation_standard(inst)
            expected = vertex_oracle_standard(inst)
            if expected is None:
                assert sol.status == "infeasible"
                seen_infeasible += 1
                continue
            assert sol.objective == expected
            x = sol.x
            assert [sum(a * xi for a, xi in zip(row, x)) for row in inst.A] == list(inst.b)
            inner = [i for i, v in enumerate(x) if inst.lo[i] < v < inst.up[i]]
            assert len(inner) <= m
        assert seen_infeasible > 0


@pytest.mark.parametrize("seed", range(3))
def test_deterministic(seed):
    inst = random_knapsack(random.Random(seed), 2, 6, 4, 3, 5)
    assert solve_relaxation(inst) == solve_relaxation(inst)
