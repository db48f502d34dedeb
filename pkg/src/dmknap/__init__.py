"""Greedy, FPTAS and exact dynamic-programming solvers for Delta-modular
multidimensional knapsack and bounded standard-form integer programs."""

from .core import (
    InvalidInstance,
    KnapsackInstance,
    SolveReport,
    StandardFormInstance,
    delta,
    delta_k,
    proximity_bound,
    proximity_bound_inf,
    rank,
    validate,
)
from .exactdp import MaxQueue, binarize_range, shift, solve_exact, solve_levels, solve_paths, to_standard_form
from .fptas import FptasParams, dp_by_costs, fptas_solve, scaled_costs
from .greedy import greedy_solve, preprocess
from .harness import solve
from .oracle import brute_force_knapsack, brute_force_standard, enumerate_reachable
from .ratlp import solve_relaxation, solve_relaxation_standard

__version__ = "0.1.0"
