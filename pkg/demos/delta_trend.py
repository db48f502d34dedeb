"""
State counts as Delta grows
===========================

Same cost structure, only the largest minor changes.  Counts are
deterministic, so no timing noise.
"""

from dmknap.harness import delta_trend

rows = delta_trend((2, 4, 8, 16), n=40)
print(f"{'Delta':>5} {'fptas':>7} {'per Delta':>9} {'exact':>7}")
for r in rows:
    print(f"{r['delta']:>5} {r['fptas_states']:>7} {r['fptas_states'] / r['delta']:>9.1f} {r['exact_states']:>7}")
