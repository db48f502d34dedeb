from fractions import Fraction

from conftest import knapsack_suite
from dmknap import KnapsackInstance, greedy_solve, preprocess, solve_relaxation
from dmknap.oracle import brute_force_knapsack


class TestPreprocess:
    def test_item_too_large(self):
        assert preprocess(KnapsackInstance([[5]], [3], [1], [2])).u == (0,)

    def test_item_fits(self):
        inst = KnapsackInstance([[1]], [3], [1], [2])
        assert preprocess(inst) == inst

    def test_each_column_violates_a_row(self):
        inst = KnapsackInstance([[1, 4], [4, 1]], [3, 3], [1, 1], [1, 1])
        assert preprocess(inst).u == (0, 0)

    def test_optimum_unchanged(self):
        for inst in knapsack_suite(100, seed=21):
            assert brute_force_knapsack(preprocess(inst)).value == brute_force_knapsack(inst).value


class TestGreedy:
    def test_small(self, small_lp):
        rep = greedy_solve(small_lp)
        assert rep.value == 3 == brute_force_knapsack(small_lp).value
        assert small_lp.is_feasible(rep.witness) and small_lp.objective(rep.witness) == 3

    def test_zero(self):
        rep = greedy_solve(KnapsackInstance([[1]], [0], [1], [1]))
        assert rep.value == 0 and rep.witness == (0,)

    def test_e2_half_of_opt(self, e2):
        rep = greedy_solve(e2)
        assert rep.value >= 5  # ceil(9 / 2)

    def test_guarantee_and_feasibility(self):
        for inst in knapsack_suite(300, seed=22):
            rep = greedy_solve(inst)
            opt = brute_force_knapsack(inst).value
            assert (inst.m + 1) * rep.value >= opt >= rep.value
            assert inst.is_feasible(rep.witness)
            assert inst.objective(rep.witness) == rep.value

    def test_integral_lp_is_optimal(self):
        hits = 0
        for inst in knapsack_suite(300, seed=23):
            lp = solve_relaxation(preprocess(inst))
            if lp.fractional_set:
                continue
            hits += 1
            assert greedy_solve(inst).value == lp.objective == brute_force_knapsack(inst).value
        assert hits > 20

    def test_tie_prefers_rounded_vector(self):
        # x_LP = (1, 1/2): floor gives c.y = 2, fractional item also 2
        inst = KnapsackInstance([[2, 2]], [3], [2, 2], [1, 1])
        lp = solve_relaxation(inst)
        assert sorted(lp.x) == [Fraction(1, 2), 1]
        rep = greedy_solve(inst)
        assert rep.value == 2
        assert rep.witness == tuple(int(v) for v in lp.x)
