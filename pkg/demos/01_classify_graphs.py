"""
Reading divergence off the defining graph
=========================================

A right-angled Coxeter group is determined by a simple graph.  Three small
graphs land in three different divergence regimes.
"""

from coxdiv.graph import CoxeterGraph, cycle_graph, pair_ladder
from coxdiv.racg import classify_racg, rank_table

# %%
# The four-cycle splits as a join, so the group is a product of two
# infinite dihedral groups.
c4 = CoxeterGraph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
print(classify_racg(c4).to_json())

# %%
# Four pairs of vertices, consecutive pairs completely joined.  Its induced
# squares chain together and cover every vertex.
lad8 = pair_ladder(4)
report = classify_racg(lad8)
print(report.verdict, len(report.witnesses["cfs_component"]["squares"]), "squares")

# %%
# The pentagon has no squares at all.  Its rank levels never empty out, which
# is reported as a lower bound of every polynomial degree.
c5 = cycle_graph(5)
print(classify_racg(c5).rank_lower_bound)
print(rank_table(c5).to_dict())
