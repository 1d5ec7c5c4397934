"""
Probing divergence along a bi-infinite geodesic
===============================================

Take ``a = (uv)^r`` and ``b = (vu)^r``; they sit at distance ``2r`` on opposite
sides of the identity.  How long is the shortest path from ``a`` to ``b``
that keeps distance at least ``r`` from the identity?
"""

import numpy as np

from coxdiv.cayley import divergence_samples, fit_power_law
from coxdiv.graph import CoxeterGraph, edgeless_graph, pair_ladder

c4 = CoxeterGraph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
s = divergence_samples(c4, "a", "c", range(2, 7))
print("C4  ", [x.path_length for x in s], "slope", round(fit_power_law(s).slope, 3))

# %%
# In the ladder group the detour grows quadratically: constant second
# differences.  At these radii the linear term still drags the log-log slope
# below its limit of 2.
s = divergence_samples(pair_ladder(4), "1", "7", [2, 3, 4])
lengths = np.array([x.path_length for x in s])
print("LAD8", lengths.tolist(), "second differences", np.diff(lengths, 2).tolist())
print("slope", round(fit_power_law(s).slope, 4))

# %%
# The infinite dihedral group is a line; removing a ball disconnects it.
print([x.path_length for x in divergence_samples(edgeless_graph(2, "ac"), "a", "c", [2, 3])])
