"""
How many lattice points does A map a small l1 ball onto?
========================================================

"""

from dmknap import delta, enumerate_reachable
from dmknap.core import reachable_count_bound

A = [[1, 2, 0, 1], [0, 1, 3, 1]]
print("Delta(A) =", delta(A))

# the image grows like gamma^m, with Delta as the constant
for gamma in range(1, 6):
    pts = enumerate_reachable(A, gamma, [(-gamma, gamma)] * 4)
    print(f"gamma={gamma}  points={len(pts):>4}  bound={reachable_count_bound(2, gamma, delta(A))}")
