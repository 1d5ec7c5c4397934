"""Finite balls in the Cayley graph of a right-angled Coxeter group.

Group elements are stored as their ShortLex normal form: the lexicographically
least reduced word in the commutation class, letters being generator indices
in vertex-declaration order.  Multiplying a normal form by one generator
either deletes one letter (the generator cancels against a trailing
commuting block) or inserts it at a single position, so every product costs
O(length) and never needs a global re-sort.

The Cayley graph is the 1-skeleton of the Davis complex.  Walls (hyperplanes
restricted to a ball) are classes of edges under the square relation
``(x, s) ~ (xt, s)`` for ``t`` commuting with ``s``.
"""
from __future__ import annotations

import math
import os
from array import array
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .graph import CoxeterGraph

__all__ = [
    "EXCEEDS_BUDGET",
    "DEFAULT_MAX_ELEMENTS",
    "BudgetExceeded",
    "NormalWord",
    "RightAngledCoxeterGroup",
    "Ball",
    "Wall",
    "DivergenceSample",
    "PowerLawFit",
    "group",
    "normal_form",
    "is_geodesic_word",
    "multiply_gen",
    "ball",
    "walls_in_ball",
    "wall_of",
    "walls_cross",
    "common_crossers",
    "avoidant_path_length",
    "divergence_samples",
    "hdiv_estimate",
    "fit_power_law",
    "word_path_walls",
]

EXCEEDS_BUDGET = "exceeds-budget"
DEFAULT_MAX_ELEMENTS = 2_000_000


class BudgetExceeded(RuntimeError):
    """A ball would hold more elements than the configured cap."""


def max_elements_default() -> int:
    env = os.environ.get("COXDIV_MAX_ELEMENTS")
    return int(env) if env else DEFAULT_MAX_ELEMENTS


@dataclass(frozen=True, order=True)
class NormalWord:
    """Canonical word for a group element; ``letters`` are generator indices."""

    letters: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def sortkey(self):
        return (len(self.letters), self.letters)


class RightAngledCoxeterGroup:
    """Word problem and normal forms for the RACG of a label-2 graph."""

    def __init__(self, g: CoxeterGraph):
        if not g.is_right_angled:
            raise ValueError("graph has edge labels other than 2; not a right-angled Coxeter group")
        self.graph = g
        self.rank = len(g)
        self.names = g.vertices
        self.commute = g.adj_mask
        self._balls: Ball | None = None

    # -- letters ----------------------------------------------------------

    def letters(self, word) -> tuple[int, ...]:
        """Generator indices for ``word`` (names, a space-separated string, or a NormalWord)."""
        if isinstance(word, NormalWord):
            return word.letters
        if isinstance(word, str):
            word = word.split() if (" " in word or word in self.graph) else list(word)
        out = []
        for s in word:
            if isinstance(s, (int, np.integer)) and not isinstance(s, bool):
                if not 0 <= s < self.rank:
                    raise KeyError(f"unknown generator index {s}")
                out.append(int(s))
            else:
                out.append(self.graph.index(str(s)))
        return tuple(out)

    def spell(self, w: Iterable[int], sep: str = " ") -> str:
        return sep.join(self.names[i] for i in w)

    # -- core products ----------------------------------------------------

    def mul(self, w: tuple[int, ...], s: int) -> tuple[tuple[int, ...], int]:
        """Normal form of ``w * s`` and the length change (+1 or -1)."""
        c = self.commute[s]
        k = len(w)
        while k:
            x = w[k - 1]
            if x == s:
                return w[: k - 1] + w[k:], -1
            if not c >> x & 1:
                break
            k -= 1
        n = len(w)
        while k < n and w[k] < s:
            k += 1
        return w[:k] + (s,) + w[k:], 1

    def reduce(self, letters: Iterable[int]) -> tuple[int, ...]:
        w: tuple[int, ...] = ()
        for s in letters:
            w = self.mul(w, s)[0]
        return w

    def inverse(self, w: tuple[int, ...]) -> tuple[int, ...]:
        return self.reduce(reversed(w))

    def product(self, x: tuple[int, ...], y: Iterable[int]) -> tuple[int, ...]:
        for s in y:
            x = self.mul(x, s)[0]
        return x

    def distance(self, x: tuple[int, ...], y: tuple[int, ...]) -> int:
        return len(self.product(self.inverse(x), y))

    # -- balls --------------------------------------------------------------

    def ball(self, radius: int, max_elements: int | None = None) -> "Ball":
        cap = max_elements_default() if max_elements is None else max_elements
        if self._balls is None:
            self._balls = Ball(self)
        self._balls.grow(radius, cap)
        return self._balls.view(radius)


_GROUPS: dict[CoxeterGraph, RightAngledCoxeterGroup] = {}


def group(g: CoxeterGraph) -> RightAngledCoxeterGroup:
    """Cached group object for ``g`` (balls are kept and extended on demand)."""
    grp = _GROUPS.get(g)
    if grp is None:
        if len(_GROUPS) > 16:
            _GROUPS.clear()
        grp = _GROUPS[g] = RightAngledCoxeterGroup(g)
    return grp


def normal_form(g: CoxeterGraph, word) -> NormalWord:
    """ShortLex normal form of ``word``.

    >>> from coxdiv.graph import cycle_graph
    >>> c4 = cycle_graph(4, names="abcd")
    >>> grp = group(c4)
    >>> grp.spell(normal_form(c4, "ba").letters, ""), grp.spell(normal_form(c4, "abba").letters, "")
    ('ab', '')
    """
    grp = group(g)
    return NormalWord(grp.reduce(grp.letters(word)))


def is_geodesic_word(g: CoxeterGraph, word) -> bool:
    grp = group(g)
    letters = grp.letters(word)
    return len(grp.reduce(letters)) == len(letters)


def multiply_gen(g: CoxeterGraph, nw: NormalWord, s) -> NormalWord:
    grp = group(g)
    (idx,) = grp.letters([s])
    return NormalWord(grp.mul(grp.reduce(grp.letters(nw)), idx)[0])


# -- balls ------------------------------------------------------------------------


class Ball:
    """Elements of the Cayley graph up to some radius, in ShortLex order.

    ``words[i]`` is a normal form, ``lengths[i]`` its word length and
    ``nbr[i, s]`` the index of ``words[i] * s`` (``-1`` when that lies outside
    the built radius).  Because elements are sorted by length first, the ball
    of any smaller radius is the prefix ``[:counts[r]]``.
    """

    def __init__(self, grp: RightAngledCoxeterGroup, _shared: "Ball" = None, _radius: int = 0):
        self.group = grp
        if _shared is None:
            self.words: list[tuple[int, ...]] = [()]
            self.index: dict[tuple[int, ...], int] = {(): 0}
            self._nbr = array("i", [-1] * grp.rank)
            self._lengths = array("i", [0])
            self.counts = [1]  # counts[r] = number of elements of length <= r
            self.built = 0
            self.radius = 0
        else:
            self.words = _shared.words
            self.index = _shared.index
            self._nbr = _shared._nbr
            self._lengths = _shared._lengths
            self.counts = _shared.counts
            self.built = _shared.built
            self.radius = _radius
        self._np = None

    def grow(self, radius: int, cap: int) -> None:
        if radius < 0:
            raise ValueError("radius must be >= 0")
        # the cap applies to what was asked for, cached or not
        top = min(radius, self.built)
        if self.counts[top] > cap:
            k = next(k for k in range(top + 1) if self.counts[k] > cap)
            raise BudgetExceeded(f"ball of radius {k} needs {self.counts[k]} elements, cap is {cap}")
        grp = self.group
        S = grp.rank
        while self.built < radius:
            k = self.built
            lo, hi = (self.counts[k - 1] if k else 0), self.counts[k]
            fresh = set()
            for i in range(lo, hi):
                w = self.words[i]
                for s in range(S):
                    if self._nbr[i * S + s] < 0:
                        v, dl = grp.mul(w, s)
                        if dl > 0:
                            fresh.add(v)
            if hi + len(fresh) > cap:
                raise BudgetExceeded(
                    f"ball of radius {k + 1} needs {hi + len(fresh)} elements, cap is {cap}"
                )
            for v in sorted(fresh):
                self.index[v] = len(self.words)
                self.words.append(v)
                self._lengths.append(k + 1)
                self._nbr.extend([-1] * S)
            for i in range(lo, hi):
                w = self.words[i]
                for s in range(S):
                    if self._nbr[i * S + s] < 0:
                        v, dl = grp.mul(w, s)
                        j = self.index[v]
                        self._nbr[i * S + s] = j
                        self._nbr[j * S + s] = i
            self.counts.append(len(self.words))
            self.built = k + 1
            self._np = None
        self.radius = max(self.radius, radius)

    def view(self, radius: int) -> "Ball":
        if radius > self.built:
            raise ValueError("radius beyond built ball")
        return Ball(self.group, _shared=self, _radius=radius)

    # -- accessors --------------------------------------------------------

    @property
    def size(self) -> int:
        return self.counts[self.radius]

    def __len__(self) -> int:
        return self.size

    def __contains__(self, w) -> bool:
        key = w.letters if isinstance(w, NormalWord) else tuple(w)
        j = self.index.get(key)
        return j is not None and j < self.size

    @property
    def sphere_sizes(self) -> list[int]:
        c = self.counts
        return [c[0]] + [c[r] - c[r - 1] for r in range(1, self.radius + 1)]

    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """``(nbr, lengths)`` as numpy arrays restricted to this radius."""
        if self._np is None or self._np[0].shape[0] != self.size:
            n, S = self.size, self.group.rank
            nbr = np.frombuffer(self._nbr, dtype=np.int32, count=n * S).reshape(n, S).copy()
            nbr[nbr >= n] = -1
            lengths = np.frombuffer(self._lengths, dtype=np.int32, count=n).copy()
            self._np = (nbr, lengths)
        return self._np

    def elements(self) -> list[NormalWord]:
        return [NormalWord(w) for w in self.words[: self.size]]

    def lookup(self, w) -> int:
        key = w.letters if isinstance(w, NormalWord) else tuple(w)
        j = self.index.get(key)
        if j is None or j >= self.size:
            raise KeyError(f"element {self.group.spell(key)!r} outside ball of radius {self.radius}")
        return j

    def edges(self) -> list[tuple[int, int]]:
        """Ball edges as ``(shorter endpoint index, generator)``."""
        nbr, lengths = self.arrays()
        out = []
        for i, s in zip(*np.nonzero(nbr >= 0)):
            if lengths[nbr[i, s]] > lengths[i]:
                out.append((int(i), int(s)))
        return out

    def distances_from(self, center) -> np.ndarray:
        """Exact Cayley distance from ``center`` to every ball element."""
        grp = self.group
        c = center.letters if isinstance(center, NormalWord) else tuple(center)
        if not c:
            return self.arrays()[1].astype(np.int64)
        cinv = grp.inverse(c)
        return np.fromiter(
            (len(grp.product(cinv, w)) for w in self.words[: self.size]), dtype=np.int64,
            count=self.size,
        )


def ball(g: CoxeterGraph, r: int, max_elements: int | None = None) -> Ball:
    """All elements at distance ``<= r`` from the identity (raises :class:`BudgetExceeded`).

    >>> from coxdiv.graph import cycle_graph
    >>> b = ball(cycle_graph(4), 2)
    >>> len(b), b.sphere_sizes
    (13, [1, 4, 8])
    """
    return group(g).ball(r, max_elements)


def _bfs(nbr: np.ndarray, sources: np.ndarray, allowed: np.ndarray, targets: np.ndarray | None = None):
    """Level-synchronous multi-source BFS; returns distance array (-1 unreached).

    When ``targets`` is given, stops at the first level touching a target.
    """
    n = nbr.shape[0]
    dist = np.full(n, -1, dtype=np.int64)
    frontier = np.unique(sources[allowed[sources]])
    dist[frontier] = 0
    d = 0
    while frontier.size:
        if targets is not None and targets[frontier].any():
            break
        nxt = nbr[frontier].ravel()
        nxt = nxt[nxt >= 0]
        nxt = np.unique(nxt)
        nxt = nxt[allowed[nxt] & (dist[nxt] < 0)]
        d += 1
        dist[nxt] = d
        frontier = nxt
    return dist


# -- walls ------------------------------------------------------------------------

Edge = tuple[tuple[int, ...], int]


@dataclass(frozen=True)
class Wall:
    """A hyperplane of the Davis complex restricted to a ball.

    ``id`` is the ShortLex-least edge ``(shorter endpoint, generator)``; it is
    the edge of the hyperplane closest to the identity, so it does not depend
    on the radius of the ball the wall was found in.
    """

    id: Edge
    generator: int
    edges: frozenset = field(repr=False, compare=False)

    def key(self):
        w, s = self.id
        return (len(w), w, s)

    def to_dict(self, grp: RightAngledCoxeterGroup) -> dict:
        return {
            "id": {"element": grp.spell(self.id[0]), "generator": grp.names[self.id[1]]},
            "type": grp.names[self.generator],
            "n_edges": len(self.edges),
        }


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        p = self.parent
        root = x
        while p.setdefault(root, root) != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def _opposite_edges(b: Ball, i: int, s: int):
    """Edges of type ``s`` opposite to edge ``(i, s)`` across squares in the ball."""
    nbr, lengths = b.arrays()
    j = nbr[i, s]
    c = b.group.commute[s]
    for t in range(b.group.rank):
        if not c >> t & 1:
            continue
        y, z = nbr[i, t], nbr[j, t]
        if y >= 0 and z >= 0:
            yield (int(y), s) if lengths[y] < lengths[z] else (int(z), s)


def _edge_partition(b: Ball) -> _UnionFind:
    uf = _UnionFind()
    for i, s in b.edges():
        uf.find((i, s))
        for e in _opposite_edges(b, i, s):
            uf.union((i, s), e)
    return uf


def _wall_from_indices(b: Ball, members: Iterable[tuple[int, int]]) -> Wall:
    members = list(members)
    edges = frozenset((b.words[i], s) for i, s in members)
    i0, s0 = min(members)  # index order is ShortLex order
    return Wall((b.words[i0], s0), s0, edges)


def walls_in_ball(g: CoxeterGraph, r: int, max_elements: int | None = None) -> list[Wall]:
    """Partition of the edges of ``ball(g, r)`` into walls, ordered by wall id."""
    b = ball(g, r, max_elements)
    uf = _edge_partition(b)
    groups: dict = {}
    for e in uf.parent:
        groups.setdefault(uf.find(e), []).append(e)
    walls = [_wall_from_indices(b, m) for m in groups.values()]
    return sorted(walls, key=Wall.key)


def _edge_index(b: Ball, element, s: int) -> tuple[int, int]:
    """Normalize an edge given by either endpoint to ``(shorter index, s)``."""
    i = b.lookup(element)
    nbr, lengths = b.arrays()
    j = nbr[i, s]
    if j < 0:
        raise KeyError("edge leaves the ball")
    return (int(i), s) if lengths[i] < lengths[j] else (int(j), s)


def _closure(b: Ball, start: tuple[int, int]) -> set[tuple[int, int]]:
    seen = {start}
    todo = [start]
    while todo:
        i, s = todo.pop()
        for e in _opposite_edges(b, i, s):
            if e not in seen:
                seen.add(e)
                todo.append(e)
    return seen


def wall_of(g: CoxeterGraph, element, generator, r: int, max_elements: int | None = None) -> Wall:
    """The wall of ``ball(g, r)`` through the edge ``{element, element*generator}``."""
    grp = group(g)
    b = ball(g, r, max_elements)
    w = grp.letters(element) if not isinstance(element, NormalWord) else element.letters
    w = grp.reduce(w)
    (s,) = grp.letters([generator]) if not isinstance(generator, int) else (generator,)
    return _wall_from_indices(b, _closure(b, _edge_index(b, w, s)))


def _locate(b: Ball, w: Wall) -> set[tuple[int, int]]:
    elem, s = w.id
    if elem not in b:
        raise ValueError(
            f"wall {b.group.spell(elem)}|{b.group.names[s]} has no edge inside radius {b.radius}"
        )
    return _closure(b, _edge_index(b, elem, s))


def _crossing_roots(b: Ball, members, uf: _UnionFind) -> set:
    nbr, lengths = b.arrays()
    out = set()
    for i, s in members:
        j = nbr[i, s]
        for t in range(b.group.rank):
            if not b.group.commute[s] >> t & 1:
                continue
            y, z = nbr[i, t], nbr[j, t]
            if y >= 0 and z >= 0:
                out.add(uf.find((i, t) if lengths[i] < lengths[y] else (int(y), t)))
    return out


def walls_cross(wA: Wall, wB: Wall, ctx: Ball) -> bool:
    """Whether some square of ``ctx`` is dual to an edge of each wall."""
    if wA.id == wB.id:
        return False
    grp = ctx.group
    s, t = wA.generator, wB.generator
    if s == t or not grp.commute[s] >> t & 1:
        return False
    nbr, lengths = ctx.arrays()
    for elem, _ in wA.edges:
        i = ctx.index.get(elem)
        if i is None or i >= ctx.size:
            continue
        j, y = nbr[i, s], nbr[i, t]
        if j < 0 or y < 0 or nbr[j, t] < 0:
            continue
        e = (ctx.words[y], t) if lengths[y] < lengths[i] else (elem, t)
        if e in wB.edges:
            return True
    return False


def common_crossers(g: CoxeterGraph, wA: Wall, wB: Wall, r: int,
                    max_elements: int | None = None) -> list[Wall]:
    """Walls of ``ball(g, r)`` crossing both ``wA`` and ``wB`` inside the ball.

    Walls are matched across radii by their ids.  An empty result at every
    tested radius is evidence for strong separation, not a proof.
    """
    if wA.id == wB.id:
        raise ValueError("identical walls")
    b = ball(g, r, max_elements)
    a_members = _locate(b, wA)
    b_members = _locate(b, wB)
    uf = _edge_partition(b)
    roots = _crossing_roots(b, a_members, uf) & _crossing_roots(b, b_members, uf)
    groups: dict = {}
    for e in uf.parent:
        root = uf.find(e)
        if root in roots:
            groups.setdefault(root, []).append(e)
    return sorted((_wall_from_indices(b, m) for m in groups.values()), key=Wall.key)


def word_path_walls(g: CoxeterGraph, word, start=None) -> list[tuple[tuple[int, ...], int]]:
    """Edges dual to the letters of ``word`` read along a path from ``start``.

    Returns ``(shorter endpoint, generator)`` per letter.  ``start`` defaults to
    the element that puts the middle vertex of the path at the identity.
    """
    grp = group(g)
    letters = grp.letters(word)
    if start is None:
        start = grp.inverse(grp.reduce(letters[: len(letters) // 2]))
    else:
        start = grp.reduce(grp.letters(start))
    out = []
    x = start
    for s in letters:
        y, dl = grp.mul(x, s)
        out.append((x if dl > 0 else y, s))
        x = y
    return out


# -- divergence ----------------------------------------------------------------------


@dataclass(frozen=True)
class DivergenceSample:
    r: int
    endpoint_distance: int
    rho: float
    path_length: int | str
    search_radius: int
    k: int = 0

    def to_dict(self) -> dict:
        return {
            "r": self.r, "k": self.k, "endpoint_distance": self.endpoint_distance,
            "rho": self.rho, "path_length": self.path_length, "search_radius": self.search_radius,
        }


def _as_letters(grp: RightAngledCoxeterGroup, w) -> tuple[int, ...]:
    if isinstance(w, NormalWord):
        return w.letters
    return grp.reduce(grp.letters(w))


def avoidant_path_length(g: CoxeterGraph, a, b, center=(), rho: float = 0.0,
                         search_radius: int | None = None,
                         max_elements: int | None = None) -> int | str:
    """Shortest ``a``-``b`` edge path whose vertices all keep distance ``>= ceil(rho)`` from ``center``.

    The search runs inside ``ball(g, search_radius)`` about the identity and
    returns ``"exceeds-budget"`` when no admissible path exists there.
    """
    grp = group(g)
    a, b, c = _as_letters(grp, a), _as_letters(grp, b), _as_letters(grp, center)
    need = max(len(a), len(b))
    if search_radius is None:
        search_radius = need
    if search_radius < need:
        raise ValueError("search_radius must cover both endpoints")
    bound = math.ceil(rho) if rho > 0 else 0
    if grp.distance(c, a) < bound or grp.distance(c, b) < bound:
        raise ValueError("endpoints lie inside the avoided ball")
    B = grp.ball(search_radius, max_elements)
    nbr, _ = B.arrays()
    ia, ib = B.lookup(a), B.lookup(b)
    if bound > 0:
        allowed = B.distances_from(c) >= bound
    else:
        allowed = np.ones(B.size, dtype=bool)
    targets = np.zeros(B.size, dtype=bool)
    targets[ib] = True
    dist = _bfs(nbr, np.array([ia]), allowed, targets)
    return int(dist[ib]) if dist[ib] >= 0 else EXCEEDS_BUDGET


def divergence_samples(g: CoxeterGraph, u, v, r_list: Sequence[int], delta: float = 0.5,
                       lam: float = 0.0, search_margin: int = 0,
                       max_elements: int | None = None) -> list[DivergenceSample]:
    """Probe the ``...uvuv...`` geodesic: ``a = (uv)^r``, ``b = (vu)^r``, centre the identity.

    The avoided radius is ``delta * k - lam`` with ``k = 2r``; each search uses
    ``ball(g, 2r + search_margin)``.  This samples one geodesic family, so it
    gives lower-bound evidence for the divergence function.
    """
    grp = group(g)
    (iu,), (iv,) = grp.letters([u]), grp.letters([v])
    if iu == iv or grp.commute[iu] >> iv & 1:
        raise ValueError(f"generators {u!r} and {v!r} must be distinct and non-adjacent")
    if not 0 < delta <= 1 or lam < 0:
        raise ValueError("need 0 < delta <= 1 and lambda >= 0")
    top = max(r_list) if r_list else 0
    grp.ball(2 * top + search_margin, max_elements)  # fail fast on the budget
    out = []
    for r in r_list:
        a = grp.reduce((iu, iv) * r)
        b = grp.reduce((iv, iu) * r)
        k = min(len(a), len(b))
        rho = delta * k - lam
        R = 2 * r + search_margin
        length = avoidant_path_length(g, a, b, (), rho, R, max_elements)
        out.append(DivergenceSample(r, grp.distance(a, b), rho, length, R, k))
    return out


def _carrier(b: Ball, members) -> np.ndarray:
    nbr, _ = b.arrays()
    idx = set()
    for i, s in members:
        idx.add(i)
        idx.add(int(nbr[i, s]))
    return np.array(sorted(idx), dtype=np.int64)


def hdiv_estimate(g: CoxeterGraph, wallY: Wall, wallZ: Wall, r: float, search_radius: int,
                  max_elements: int | None = None, detail: bool = False):
    """Hyperplane divergence probe between two non-crossing walls.

    ``p`` is the wall-``Y`` end of a shortest carrier-to-carrier path (the
    smallest such vertex in ShortLex order).  Returns the length of a shortest
    path from the carrier of ``Y`` to the carrier of ``Z`` whose vertices keep
    distance ``>= ceil(r)`` from ``p``, or ``"exceeds-budget"``.
    """
    B = ball(g, search_radius, max_elements)
    ym, zm = _locate(B, wallY), _locate(B, wallZ)
    uf = _edge_partition(B)
    if uf.find(next(iter(ym))) == uf.find(next(iter(zm))):
        raise ValueError("the two walls coincide")
    if walls_cross(_wall_from_indices(B, ym), _wall_from_indices(B, zm), B):
        raise ValueError("walls cross inside the ball")
    nbr, _ = B.arrays()
    yc, zc = _carrier(B, ym), _carrier(B, zm)
    everywhere = np.ones(B.size, dtype=bool)
    to_z = _bfs(nbr, zc, everywhere)
    reach = to_z[yc]
    if (reach < 0).all():
        raise ValueError("walls not connected inside the ball")
    gap = int(reach[reach >= 0].min())
    p = int(yc[np.nonzero(reach == gap)[0][0]])
    bound = math.ceil(r) if r > 0 else 0
    allowed = B.distances_from(B.words[p]) >= bound if bound else everywhere
    zmask = np.zeros(B.size, dtype=bool)
    zmask[zc] = True
    dist = _bfs(nbr, yc, allowed, zmask & allowed)
    hits = dist[zc]
    hits = hits[hits >= 0]
    value: int | str = int(hits.min()) if hits.size else EXCEEDS_BUDGET
    if detail:
        return {"value": value, "p": B.group.spell(B.words[p]), "gap": gap, "r": r,
                "search_radius": search_radius}
    return value


@dataclass(frozen=True)
class PowerLawFit:
    slope: float
    intercept: float
    max_residual: float
    n: int


def fit_power_law(samples: Iterable) -> PowerLawFit:
    """Least squares on ``(log r, log length)`` over the finite samples.

    Accepts ``(r, length)`` pairs or :class:`DivergenceSample` objects.
    """
    pts = []
    for s in samples:
        r, length = (s.r, s.path_length) if isinstance(s, DivergenceSample) else s
        if isinstance(length, str) or length is None:
            continue
        if r < 2:
            raise ValueError("samples need r >= 2")
        pts.append((float(r), float(length)))
    if len(pts) < 3:
        raise ValueError(f"need at least 3 finite samples, got {len(pts)}")
    x = np.log([p[0] for p in pts])
    y = np.log([p[1] for p in pts])
    A = np.vstack([x, np.ones_like(x)]).T
    (slope, intercept), *_ = np.linalg.lstsq(A, y, rcond=None)
    resid = np.abs(y - (slope * x + intercept))
    return PowerLawFit(float(slope), float(intercept), float(resid.max()), len(pts))
