"""Lower-bound criteria for Coxeter groups that need not be right-angled.

``hat_graph`` contracts every odd-labeled edge to a point; a hat graph of
diameter greater than 2 forces at least quadratic divergence.  The
higher-degree test combines rank-n pairs of the underlying graph with local
evenness and local triangle-freeness around the pair.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .graph import CoxeterGraph, _bits, all_pairs_distances
from .racg import _link_nonadjacent_pairs, rank_table

__all__ = [
    "HatGraph",
    "odd_component",
    "hat_graph",
    "hat_diameter",
    "max_label",
    "is_locally_even",
    "is_locally_triangle_free",
    "coxeter_lower_bounds",
]

INF = math.inf


def _odd(m: int) -> bool:
    return m % 2 == 1


def odd_component(g: CoxeterGraph, v: str) -> set[str]:
    """Vertices joined to ``v`` by a path of odd-labeled edges (``v`` included)."""
    start = g.index(v)
    odd_adj = _odd_masks(g)
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for i in _bits(frontier):
            nxt |= odd_adj[i]
        frontier = nxt & ~seen
        seen |= frontier
    return {g.vertices[i] for i in _bits(seen)}


def _odd_masks(g: CoxeterGraph) -> list[int]:
    masks = [0] * len(g)
    for u, v, m in g.edge_list():
        if _odd(m):
            i, j = g.index(u), g.index(v)
            masks[i] |= 1 << j
            masks[j] |= 1 << i
    return masks


@dataclass(frozen=True)
class HatGraph:
    """Quotient of a Coxeter graph by its odd-labeled edges.

    ``edges`` is a multiset: one ``(class, class, label)`` entry per even edge
    of the source graph, parallel edges and self-loops included.
    """

    classes: tuple[tuple[str, ...], ...]
    edges: tuple[tuple[int, int, int], ...]
    class_of: dict

    def to_dict(self) -> dict:
        return {"classes": [list(c) for c in self.classes], "edges": [list(e) for e in self.edges]}

    def simple_adjacency(self) -> list[int]:
        """Class-level neighbour bitmasks; parallel edges collapse, loops dropped."""
        masks = [0] * len(self.classes)
        for a, b, _ in self.edges:
            if a != b:
                masks[a] |= 1 << b
                masks[b] |= 1 << a
        return masks

    def distances(self) -> np.ndarray:
        n = len(self.classes)
        adj = self.simple_adjacency()
        dist = np.full((n, n), INF)
        for s in range(n):
            seen = frontier = 1 << s
            d = 0
            while frontier:
                for i in _bits(frontier):
                    dist[s, i] = d
                nxt = 0
                for i in _bits(frontier):
                    nxt |= adj[i]
                frontier = nxt & ~seen
                seen |= frontier
                d += 1
        return dist


def hat_graph(g: CoxeterGraph) -> HatGraph:
    """Contract odd-labeled edges; classes ordered by their first vertex."""
    odd_adj = _odd_masks(g)
    cls = [-1] * len(g)
    classes = []
    for i in range(len(g)):
        if cls[i] >= 0:
            continue
        seen = frontier = 1 << i
        while frontier:
            nxt = 0
            for j in _bits(frontier):
                nxt |= odd_adj[j]
            frontier = nxt & ~seen
            seen |= frontier
        members = _bits(seen)
        for j in members:
            cls[j] = len(classes)
        classes.append(tuple(g.vertices[j] for j in members))
    edges = []
    for u, v, m in g.edge_list():
        if not _odd(m):
            a, b = sorted((cls[g.index(u)], cls[g.index(v)]))
            edges.append((a, b, m))
    edges.sort()
    return HatGraph(tuple(classes), tuple(edges), {v: cls[i] for i, v in enumerate(g.vertices)})


def hat_diameter(h: HatGraph) -> float:
    """Hop diameter of the class graph; ``inf`` when disconnected, 0 for one class."""
    if not h.classes:
        return 0
    d = h.distances()
    top = d.max()
    return INF if np.isinf(top) else int(top)


def max_label(g: CoxeterGraph) -> int:
    return max((m for _, _, m in g.edge_list()), default=2)


def _ball_mask(g: CoxeterGraph, v: str, r: int) -> int:
    """Vertices at distance < r from v."""
    if r < 1:
        raise ValueError("r must be >= 1")
    adj = g.adj_mask
    seen = frontier = 1 << g.index(v)
    for _ in range(r - 1):
        nxt = 0
        for i in _bits(frontier):
            nxt |= adj[i]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_locally_even(g: CoxeterGraph, v: str, r: int) -> bool:
    """Every edge at every vertex within distance < r of ``v`` has an even label."""
    near = _ball_mask(g, v, r)
    for a, b, m in g.edge_list():
        if _odd(m) and (near >> g.index(a) & 1 or near >> g.index(b) & 1):
            return False
    return True


def _in_triangle(g: CoxeterGraph) -> list[bool]:
    adj = g.adj_mask
    return [any(adj[i] & adj[j] for j in _bits(adj[i])) for i in range(len(g))]


def is_locally_triangle_free(g: CoxeterGraph, v: str, r: int) -> bool:
    """No vertex within distance < r of ``v`` lies in a triangle."""
    near = _ball_mask(g, v, r)
    tri = _in_triangle(g)
    return not any(tri[i] for i in _bits(near))


def _higher_degree_hits(g: CoxeterGraph, n_max: int) -> list[dict]:
    table = rank_table(g, n_max)
    link_pairs = _link_nonadjacent_pairs(g)
    adj = g.adj_mask
    names = g.vertices
    hits = []
    for n in range(1, n_max + 1):
        if n == 1:
            prev = None
        else:
            try:
                prev = {(1 << g.index(a)) | (1 << g.index(b)) for a, b in table.level(n - 1)}
            except ValueError:
                break
        rank1 = {(1 << g.index(a)) | (1 << g.index(b)) for a, b in table.level(1)}
        for i, j in combinations(range(len(g)), 2):
            if adj[i] >> j & 1:
                continue
            for u, v in ((i, j), (j, i)):
                if n == 1:
                    ok = ((1 << u) | (1 << v)) in rank1
                else:
                    ok = all(p in prev for p in link_pairs[u])
                if not ok:
                    continue
                if (is_locally_triangle_free(g, names[u], n)
                        and is_locally_even(g, names[u], n + 1)
                        and is_locally_even(g, names[v], 1)):
                    hits.append({"n": n, "u": names[u], "v": names[v], "degree": n + 1})
                    break
    return hits


def coxeter_lower_bounds(g: CoxeterGraph, n_max: int = 8) -> dict:
    """Graph-checkable divergence lower bounds for a general Coxeter graph.

    ``quadratic`` reports the hat-graph diameter test with a witness pair of
    classes at distance > 2 and one representative from each.  ``higher_degree``
    lists every pair ``(u, v)`` meeting the rank/locality preconditions at each
    ``n <= n_max``; each hit certifies degree ``n + 1`` along ``...uvuv...``.
    """
    h = hat_graph(g)
    diam = hat_diameter(h)
    quad: dict = {"holds": False, "diameter": _num(diam)}
    if h.classes and diam > 2:
        d = h.distances()
        top = d.max()
        a, b = [int(x) for x in np.argwhere(d == top)[0]]
        quad = {
            "holds": True,
            "diameter": _num(diam),
            "witness": {
                "classes": [list(h.classes[a]), list(h.classes[b])],
                "representatives": [h.classes[a][0], h.classes[b][0]],
                "distance": _num(top),
            },
            "disconnected": bool(np.isinf(top)),
        }
    return {
        "max_label": max_label(g),
        "hat_graph": h.to_dict(),
        "hat_diameter": _num(diam),
        "quadratic": quad,
        "higher_degree": _higher_degree_hits(g, n_max),
    }


def _num(x):
    return "inf" if x == INF else int(x)


def underlying_diameter(g: CoxeterGraph) -> float:
    d = all_pairs_distances(g)
    return INF if np.isinf(d).any() else int(d.max()) if d.size else 0
