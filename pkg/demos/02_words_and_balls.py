"""
Normal forms and ball growth
============================

Elements are stored as ShortLex-least reduced words.  Balls are built one
sphere at a time.
"""

import numpy as np

from coxdiv.cayley import ball, group, is_geodesic_word, normal_form
from coxdiv.graph import CoxeterGraph, cycle_graph

c4 = CoxeterGraph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
for w in ("ba", "abba", "acac", "abab"):
    print(f"{w!r:8} -> {group(c4).spell(normal_form(c4, w).letters)!r:8}  geodesic={is_geodesic_word(c4, w)}")

# %%
# The four-cycle group is quasi-isometric to the plane: spheres grow linearly.
# The pentagon group is hyperbolic: spheres grow exponentially.
print("C4", ball(c4, 6).sphere_sizes)
sizes = np.array(ball(cycle_graph(5), 8).sphere_sizes[1:], dtype=float)
print("C5", sizes.astype(int).tolist())
print("C5 growth ratios", np.round(sizes[1:] / sizes[:-1], 4).tolist())

# %%
# The neighbour table is a dense numpy array (-1 marks edges leaving the ball).
nbr, lengths = ball(cycle_graph(5), 3).arrays()
print(nbr.shape, np.bincount(lengths).tolist())
