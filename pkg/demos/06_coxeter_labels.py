"""
Labeled Coxeter graphs
======================

Odd labels glue generators together (they become conjugate).  Contracting the
odd edges gives a quotient graph whose diameter bounds divergence from below.
"""

import json

from coxdiv.coxeter import coxeter_lower_bounds, hat_graph
from coxdiv.graph import CoxeterGraph, path_graph

even_path = path_graph(4, ["u", "a", "b", "v"], label=4)
rep = coxeter_lower_bounds(even_path, n_max=2)
print(json.dumps(rep["quadratic"]))
print(rep["higher_degree"])

# %%
g = CoxeterGraph("pqrst", [("p", "q", 3), ("q", "r", 4), ("r", "s", 5), ("s", "t", 2), ("t", "p", 6)])
h = hat_graph(g)
print(h.to_dict())
print(coxeter_lower_bounds(g)["hat_diameter"])
