"""
Exact solvers on a signed standard-form ILP
===========================================

Both dynamic programs search a small l1 ball around the rounded LP optimum.
"""

from dmknap import StandardFormInstance, shift, solve_exact, solve_relaxation_standard
from dmknap.oracle import brute_force_standard

inst = StandardFormInstance(
    A=[[2, -1, 1, 0], [1, 1, 0, -2]],
    b=[3, 1],
    c=[3, 1, -1, 2],
    lo=[0, -2, 0, 0],
    up=[3, 3, 2, 2],
)

lp = solve_relaxation_standard(inst)
sh = shift(inst)
print("LP optimum", [str(v) for v in lp.x], "-> floor", sh.floor_x)
print("search radius", sh.radius, "with Delta =", sh.delta)

for variant, kw in [("levels", {}), ("levels", {"binarized": True}), ("paths", {})]:
    rep = solve_exact(inst, variant, **kw)
    label = variant + (" (binarized)" if kw else "")
    print(f"{label:<20} value={rep.value}  witness={rep.witness}  states={rep.stats['states']}  "
          f"distance={rep.stats['distance']}")

print("brute force         value =", brute_force_standard(inst).value)
