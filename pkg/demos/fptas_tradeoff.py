"""
Approximation quality against DP size
=====================================

"""

from fractions import Fraction

from dmknap.harness import delta_family
from dmknap import fptas_solve, solve_exact

inst = delta_family(4, n=24, seed=1)
opt = solve_exact(inst).value
print(f"m={inst.m} n={inst.n} optimum={opt}")

# smaller epsilon: more heavy items and more cost levels
for eps in (Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)):
    rep = fptas_solve(inst, eps)
    print(f"eps={str(eps):>4}  value={rep.value:>4}  floor={float((1 - eps) * opt):7.1f}  "
          f"heavy={rep.stats['heavy']:>2}  states={rep.stats['states']}")
