"""
LP relaxation and greedy rounding
=================================

Solve a small knapsack relaxation in exact rationals, then round it.
"""

from dmknap import KnapsackInstance, greedy_solve, solve_relaxation
from dmknap.oracle import brute_force_knapsack

# two resources, four items
inst = KnapsackInstance(A=[[5, 5, 2, 2], [5, 1, 4, 0]], b=[11, 5], c=[4, 7, 4, 8], u=[1, 2, 1, 1])

# the vertex has at most m fractional coordinates
lp = solve_relaxation(inst)
print("LP vertex:", [str(v) for v in lp.x], "objective", lp.objective)
print("fractional coordinates:", lp.fractional_set)

# rounding down, or the best single fractional item, keeps 1/(m+1) of the optimum
rep = greedy_solve(inst)
opt = brute_force_knapsack(inst).value
print(f"greedy {rep.value}, optimum {opt}, (m+1)*greedy = {(inst.m + 1) * rep.value}")
