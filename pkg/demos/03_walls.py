"""
Walls and common crossers
=========================

An edge of the Cayley graph belongs to a wall: the class of edges reached by
stepping across squares.  Two walls that no third wall crosses stay far apart.
"""

from coxdiv.cayley import NormalWord, common_crossers, group, wall_of, word_path_walls
from coxdiv.graph import CoxeterGraph, cycle_graph
from coxdiv.racg import gamma_complete_word

c5 = cycle_graph(5)
w0 = gamma_complete_word(c5)
(ye, ys), (ze, zs) = word_path_walls(c5, w0)[0], word_path_walls(c5, w0)[-1]
grp = group(c5)
print("word", " ".join(w0), "| walls at", grp.spell(ye), "/", grp.spell(ze))
for r in (3, 4, 5, 6):
    Y = wall_of(c5, NormalWord(ye), ys, r)
    Z = wall_of(c5, NormalWord(ze), zs, r)
    print(f"r={r}: {len(common_crossers(c5, Y, Z, r))} common crossers")

# %%
# In the four-cycle group two parallel walls of type a are crossed by every
# wall of type b or d, so the count keeps climbing with the radius.
c4 = CoxeterGraph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
for r in (3, 4, 5, 6):
    Y, Z = wall_of(c4, "", "a", r), wall_of(c4, "ac", "a", r)
    print(f"r={r}: {len(common_crossers(c4, Y, Z, r))} common crossers")
