"""
Hyperplane divergence
=====================

Fix two walls and a point ``p`` on the first.  Measure the shortest
wall-to-wall path that avoids the ball of radius ``r`` about ``p``.
"""

from coxdiv.cayley import NormalWord, hdiv_estimate, wall_of, word_path_walls
from coxdiv.graph import CoxeterGraph, cycle_graph
from coxdiv.racg import gamma_complete_word

c4 = CoxeterGraph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
Y, Z = wall_of(c4, "", "a", 8), wall_of(c4, "ac", "a", 8)
print("C4", [hdiv_estimate(c4, Y, Z, r, 8) for r in range(5)])

# %%
c5 = cycle_graph(5)
edges = word_path_walls(c5, gamma_complete_word(c5))
(ye, ys), (ze, zs) = edges[0], edges[-1]
Y, Z = wall_of(c5, NormalWord(ye), ys, 9), wall_of(c5, NormalWord(ze), zs, 9)
for r in range(6):
    print(r, hdiv_estimate(c5, Y, Z, r, 9, detail=True))
