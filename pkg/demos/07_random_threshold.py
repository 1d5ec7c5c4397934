"""
The CFS threshold in random graphs
==================================

Sweep the edge probability through ``n**-0.5`` and count how often the random
graph is built from squares.
"""

from coxdiv.randomgraphs import exponent_grid, rows_to_csv, threshold_sweep

n = 30
rows = threshold_sweep(n, exponent_grid(n, -0.8, -0.2, 7), samples=60, seed=1)
print(rows_to_csv(rows))
for r in rows:
    print(f"p={r.p:.3f} {'#' * round(40 * r.fraction)}")
