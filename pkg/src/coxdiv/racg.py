"""Divergence criteria for right-angled Coxeter groups read off the defining graph.

The classifier runs on the graph with cone vertices removed and reports

* ``linear``          when the graph is a non-trivial join,
* ``quadratic``       when it is CFS and not a join,
* ``at-least-cubic``  otherwise, together with the best rank-pair degree bound,

plus the degenerate ``finite-group`` / ``infinite-ends`` cases.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .graph import (
    CoxeterGraph,
    _bits,
    _complement_masks,
    _square_masks,
    connected_components,
    is_nontrivial_join,
    reduce_cone_vertices,
)

__all__ = [
    "UNBOUNDED",
    "ALL_DEGREES",
    "RankTable",
    "RankPair",
    "WordCheck",
    "ClassificationReport",
    "is_cfs",
    "gamma_complete_word",
    "validate_gamma_complete_word",
    "rank_table",
    "max_rank_pair",
    "classify_racg",
]

UNBOUNDED = "unbounded"
ALL_DEGREES = "all degrees"

VERDICTS = ("finite-group", "infinite-ends", "linear", "quadratic", "at-least-cubic", "degenerate")


def is_cfs(g: CoxeterGraph) -> tuple[bool, dict | None]:
    """True iff some component of the square graph has support ``V(g)``.

    The witness holds the component's squares (as vertex 4-tuples) and its
    support, taken from the first qualifying component.

    >>> from coxdiv.graph import cycle_graph
    >>> is_cfs(cycle_graph(5))
    (False, None)
    """
    if len(g) == 0:
        return False, None
    squares = _square_masks(g)
    # squares sharing a diagonal are adjacent, so components = classes of diagonals
    parent: dict[int, int] = {}

    def find(x):
        root = x
        while parent.setdefault(root, root) != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for d1, d2 in squares:
        ra, rb = find(d1), find(d2)
        if ra != rb:
            parent[rb] = ra
    support: dict[int, int] = {}
    for d1, d2 in squares:
        root = find(d1)
        support[root] = support.get(root, 0) | d1 | d2
    full = (1 << len(g)) - 1
    for d1, d2 in squares:  # first component in square order
        root = find(d1)
        if support[root] == full:
            members = [sq for sq in squares if find(sq[0]) == root]
            return True, {
                "squares": [[g.vertices[i] for i in _bits(a | b)] for a, b in members],
                "support": list(g.vertices),
            }
    return False, None


# -- Gamma-complete words -----------------------------------------------------


def gamma_complete_word(g: CoxeterGraph) -> list[str]:
    """A cyclic word using every generator with consecutive letters non-adjacent.

    Built as a closed walk in the complement graph: visit the vertices in DFS
    preorder and join consecutive ones (and the last back to the first) by
    shortest complement paths.

    >>> from coxdiv.graph import cycle_graph
    >>> gamma_complete_word(cycle_graph(5))
    ['1', '3', '5', '2', '4']
    """
    n = len(g)
    if n < 2:
        raise ValueError("a Gamma-complete word needs at least two vertices")
    if is_nontrivial_join(g)[0]:
        raise ValueError("graph is a join; no Gamma-complete word exists")
    comp = _complement_masks(g)
    order = []
    seen = 0
    stack = [0]
    while stack:
        v = stack.pop()
        if seen >> v & 1:
            continue
        seen |= 1 << v
        order.append(v)
        stack.extend(reversed([u for u in _bits(comp[v]) if not seen >> u & 1]))
    walk = [order[0]]
    for a, b in zip(order, order[1:] + order[:1]):
        walk.extend(_shortest_path(comp, a, b)[1:])
    walk.pop()  # closing vertex repeats the start
    return [g.vertices[i] for i in walk]


def _shortest_path(masks: Sequence[int], a: int, b: int) -> list[int]:
    prev = {a: None}
    frontier = [a]
    while frontier and b not in prev:
        nxt = []
        for x in frontier:
            for y in _bits(masks[x]):
                if y not in prev:
                    prev[y] = x
                    nxt.append(y)
        frontier = nxt
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    return path[::-1]


@dataclass(frozen=True)
class WordCheck:
    """Outcome of validating a candidate Gamma-complete word.

    ``index`` is the 1-based position ``i`` of the failing pair
    ``(s_i, s_{i+1})``; the wraparound pair reports ``i = k``.
    """

    valid: bool
    index: int | None = None
    reason: str = ""
    missing: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.valid


def validate_gamma_complete_word(g: CoxeterGraph, word: Sequence[str]) -> WordCheck:
    word = list(word)
    for i, s in enumerate(word, 1):
        if s not in g:
            return WordCheck(False, i, f"unknown generator {s!r}")
    missing = tuple(v for v in g.vertices if v not in set(word))
    if missing:
        return WordCheck(False, None, "vertices missing: " + ", ".join(missing), missing)
    k = len(word)
    for i in range(k - 1):
        s, t = word[i], word[i + 1]
        if s == t or g.adjacent(s, t):
            return WordCheck(False, i + 1, f"m({s},{t}) is finite")
    s, t = word[-1], word[0]
    if s == t or g.adjacent(s, t):
        return WordCheck(False, k, f"wraparound m({s},{t}) is finite")
    return WordCheck(True)


# -- rank-n pairs ---------------------------------------------------------------


@dataclass(frozen=True)
class RankTable:
    """Nested levels of rank-n pairs.

    ``levels[0]`` is level 1.  Pairs are 2-tuples of vertex names in vertex
    order.  ``max_finite_rank`` is the deepest nonempty level, 0 when level 1
    is empty, or ``"unbounded"`` when a nonempty level repeats.
    """

    levels: tuple[frozenset, ...]
    fixpoint: bool
    max_finite_rank: int | str
    n_max: int
    vertices: tuple[str, ...] = field(repr=False, default=())

    def level(self, n: int) -> frozenset:
        """Level ``n`` (1-based); beyond the computed range the last level persists
        when a fixpoint or an empty level was reached."""
        if n < 1:
            raise ValueError("levels start at 1")
        if n <= len(self.levels):
            return self.levels[n - 1]
        if self.fixpoint or (self.levels and not self.levels[-1]):
            return self.levels[-1]
        raise ValueError(f"level {n} beyond n_max={self.n_max}")

    def rank_of(self, pair) -> int | str:
        """Largest ``n`` with the pair in level ``n`` (``"unbounded"`` at a fixpoint)."""
        key = self._key(pair)
        best = 0
        for n, lev in enumerate(self.levels, 1):
            if key in lev:
                best = n
        if best == len(self.levels) and self.fixpoint:
            return UNBOUNDED
        return best

    def _key(self, pair):
        a, b = pair
        pos = {v: i for i, v in enumerate(self.vertices)}
        return (a, b) if pos[a] < pos[b] else (b, a)

    def to_dict(self) -> dict:
        pos = {v: i for i, v in enumerate(self.vertices)}
        return {
            "levels": [sorted((list(p) for p in lev), key=lambda p: (pos[p[0]], pos[p[1]]))
                       for lev in self.levels],
            "fixpoint": self.fixpoint,
            "max_finite_rank": self.max_finite_rank,
        }


def _link_nonadjacent_pairs(g: CoxeterGraph) -> list[list[int]]:
    """Per vertex, the non-adjacent pairs inside its link encoded as bitmasks."""
    adj = g.adj_mask
    out = []
    for s in range(len(g)):
        link = _bits(adj[s])
        out.append([(1 << a) | (1 << b) for a, b in combinations(link, 2) if not adj[a] >> b & 1])
    return out


def rank_table(g: CoxeterGraph, n_max: int = 8) -> RankTable:
    """Level sets of rank-n pairs, iterated to a fixpoint, an empty level, or ``n_max``.

    Level 1 holds the non-adjacent pairs lying in no induced square.  A pair
    ``(s, t)`` is in level ``n`` when every non-adjacent pair of ``Link(s)``
    is in level ``n-1``, or the same holds for ``Link(t)``.  A link without
    non-adjacent pairs satisfies the condition vacuously.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    n = len(g)
    adj = g.adj_mask
    nonadj = [(1 << a) | (1 << b) for a, b in combinations(range(n), 2) if not adj[a] >> b & 1]
    in_square = set()
    for d1, d2 in _square_masks(g):
        in_square.add(d1)
        in_square.add(d2)
    level = frozenset(p for p in nonadj if p not in in_square)
    levels = [level]
    link_pairs = _link_nonadjacent_pairs(g)
    fixpoint = False
    while len(levels) < n_max and level:
        good = [all(p in level for p in link_pairs[s]) for s in range(n)]
        nxt = frozenset(p for p in nonadj if any(good[i] for i in _bits(p)))
        if nxt == level:
            fixpoint = True
            break
        levels.append(nxt)
        level = nxt
    if not fixpoint and level and len(levels) == n_max:
        # one more step decides whether the last computed level is already stable
        good = [all(p in level for p in link_pairs[s]) for s in range(n)]
        fixpoint = frozenset(p for p in nonadj if any(good[i] for i in _bits(p))) == level
    as_names = tuple(frozenset(tuple(g.vertices[i] for i in _bits(p)) for p in lev) for lev in levels)
    if fixpoint:
        top: int | str = UNBOUNDED
    else:
        top = max((i for i, lev in enumerate(as_names, 1) if lev), default=0)
    return RankTable(as_names, fixpoint, top, n_max, g.vertices)


@dataclass(frozen=True)
class RankPair:
    pair: tuple[str, str]
    rank: int | str
    vacuous_link: bool = False

    def to_dict(self) -> dict:
        return {"pair": list(self.pair), "rank": self.rank, "vacuous_link": self.vacuous_link}


def _deepest_pair(g: CoxeterGraph, table: RankTable) -> RankPair | None:
    if table.max_finite_rank == 0:
        return None
    deepest = table.levels[-1] if table.fixpoint else table.levels[table.max_finite_rank - 1]
    pos = {v: i for i, v in enumerate(g.vertices)}
    pair = min(deepest, key=lambda p: (pos[p[0]], pos[p[1]]))
    vacuous = False
    if table.max_finite_rank == UNBOUNDED or table.max_finite_rank >= 2:
        link_pairs = _link_nonadjacent_pairs(g)
        vacuous = any(not link_pairs[pos[x]] for x in pair)
    return RankPair(pair, table.max_finite_rank, vacuous)


def max_rank_pair(g: CoxeterGraph, n_max: int = 8) -> RankPair | None:
    """A pair from the deepest nonempty level, or ``None`` without rank-1 pairs.

    >>> from coxdiv.graph import pair_ladder
    >>> max_rank_pair(pair_ladder(4)).pair
    ('1', '7')
    """
    return _deepest_pair(g, rank_table(g, n_max))


# -- classification -----------------------------------------------------------


@dataclass(frozen=True)
class ClassificationReport:
    verdict: str
    rank_lower_bound: int | str | None
    witnesses: dict
    reduction_removed: tuple[str, ...]

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "rank_lower_bound": self.rank_lower_bound,
            "witnesses": self.witnesses,
            "reduction_removed": list(self.reduction_removed),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def classify_racg(g: CoxeterGraph, n_max: int = 8) -> ClassificationReport:
    """Divergence verdict for the right-angled Coxeter group of ``g``.

    Edge labels are ignored (every edge is read as m = 2).
    """
    h, removed = reduce_cone_vertices(g)
    removed = tuple(removed)
    n = len(h)
    if n == 0 or h.n_edges == n * (n - 1) // 2:
        return ClassificationReport("finite-group", None, {"clique": list(g.vertices)}, removed)
    comps = connected_components(h)
    if n == 1 or len(comps) > 1:
        return ClassificationReport("infinite-ends", None, {"components": comps}, removed)
    join, parts = is_nontrivial_join(h)
    if join:
        return ClassificationReport("linear", None, {"join": [parts[0], parts[1]]}, removed)
    word = gamma_complete_word(h)
    cfs, cfs_w = is_cfs(h)
    if cfs:
        return ClassificationReport(
            "quadratic", None, {"cfs_component": cfs_w, "gamma_complete_word": word}, removed
        )
    table = rank_table(h, n_max)
    rp = _deepest_pair(h, table)
    witnesses: dict = {"not_cfs": True, "gamma_complete_word": word}
    bound: int | str | None = None
    if rp is not None:
        witnesses["rank_pair"] = rp.to_dict()
        bound = ALL_DEGREES if rp.rank == UNBOUNDED else rp.rank + 1
    return ClassificationReport("at-least-cubic", bound, witnesses, removed)
