"""Labeled Coxeter defining graphs: data model, parsing and elementary combinatorics.

A :class:`CoxeterGraph` stores a vertex list (declaration order matters, it
fixes every deterministic ordering downstream) and a symmetric map from
unordered vertex pairs to integer labels ``m >= 2``.  A missing pair means
``m = infinity``.  Right-angled graphs carry label 2 on every edge.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence

import numpy as np

__all__ = [
    "CoxeterGraph",
    "GraphParseError",
    "Square",
    "SquareGraph",
    "parse_graph",
    "load_graph",
    "dump_graph",
    "complement",
    "induced_subgraph",
    "connected_components",
    "is_nontrivial_join",
    "reduce_cone_vertices",
    "neighborhood",
    "enumerate_induced_squares",
    "square_graph",
    "all_pairs_distances",
    "cycle_graph",
    "path_graph",
    "complete_graph",
    "edgeless_graph",
    "pair_ladder",
]


class GraphParseError(ValueError):
    """Malformed graph text.  ``line``/``column`` are 1-based, 0 when unknown."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message = message
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


class CoxeterGraph:
    """Immutable labeled simplicial graph defining a Coxeter group.

    >>> g = CoxeterGraph(["a", "b", "c"], [("a", "b"), ("b", "c", 3)])
    >>> g.label("b", "c"), g.label("a", "c")
    (3, None)
    """

    __slots__ = ("vertices", "_edges", "_index", "__dict__")

    def __init__(self, vertices: Iterable[str], edges: Iterable[Sequence] | Mapping = ()):
        verts = tuple(str(v) for v in vertices)
        index = {}
        for v in verts:
            if v in index:
                raise ValueError(f"duplicate vertex {v!r}")
            index[v] = len(index)
        if isinstance(edges, Mapping):
            edges = [(*tuple(k), m) for k, m in edges.items()]
        emap: dict[frozenset, int] = {}
        for e in edges:
            if len(e) == 2:
                u, v, m = e[0], e[1], 2
            elif len(e) == 3:
                u, v, m = e
            else:
                raise ValueError(f"edge must be (u, v) or (u, v, label), got {e!r}")
            u, v = str(u), str(v)
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            for x in (u, v):
                if x not in index:
                    raise ValueError(f"edge endpoint {x!r} is not a declared vertex")
            if isinstance(m, bool) or not isinstance(m, (int, np.integer)) or m < 2:
                raise ValueError(f"edge label must be an integer >= 2, got {m!r}")
            key = frozenset((u, v))
            if key in emap:
                raise ValueError(f"duplicate edge {u!r}-{v!r}")
            emap[key] = int(m)
        self.vertices = verts
        self._index = index
        self._edges = emap

    # -- basic accessors ---------------------------------------------------

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self._index

    def __iter__(self):
        return iter(self.vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoxeterGraph):
            return NotImplemented
        return self.vertices == other.vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.vertices, frozenset(self._edges.items())))

    def __repr__(self) -> str:
        return f"CoxeterGraph(vertices={list(self.vertices)!r}, edges={self.edge_list()!r})"

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise KeyError(f"unknown vertex {v!r}") from None

    def label(self, u: str, v: str) -> int | None:
        """Edge label m(u, v), or ``None`` when the pair is not an edge (m = infinity)."""
        return self._edges.get(frozenset((u, v)))

    def adjacent(self, u: str, v: str) -> bool:
        return frozenset((u, v)) in self._edges

    @property
    def edges(self) -> Mapping[frozenset, int]:
        return dict(self._edges)

    def edge_list(self) -> list[tuple[str, str, int]]:
        """Edges as ``(u, v, m)`` with ``u`` before ``v`` in vertex order, sorted."""
        out = []
        for key, m in self._edges.items():
            u, v = sorted(key, key=self._index.__getitem__)
            out.append((u, v, m))
        out.sort(key=lambda e: (self._index[e[0]], self._index[e[1]]))
        return out

    @property
    def n_edges(self) -> int:
        return len(self._edges)

    @cached_property
    def adj_mask(self) -> tuple[int, ...]:
        """Neighbour bitmask per vertex index (bit j set iff j adjacent)."""
        masks = [0] * len(self.vertices)
        for key in self._edges:
            u, v = (self._index[x] for x in key)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def is_right_angled(self) -> bool:
        return all(m == 2 for m in self._edges.values())

    def degree(self, v: str) -> int:
        return bin(self.adj_mask[self.index(v)]).count("1")

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edge_list()]}


def _names(g: CoxeterGraph, mask: int) -> list[str]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(g.vertices[i])
        mask >>= 1
        i += 1
    return out


# -- parsing -----------------------------------------------------------------


def parse_graph(text: str, format: str = "auto") -> CoxeterGraph:
    """Parse graph text in ``json``, ``adjacency`` or ``dot`` format.

    ``auto`` picks JSON when the text starts with ``{``, DOT when it starts
    with ``graph``/``strict graph``, adjacency otherwise.

    >>> parse_graph("a b\\nb c").edge_list()
    [('a', 'b', 2), ('b', 'c', 2)]
    """
    fmt = format.lower()
    if fmt == "auto":
        head = _strip_leading_comments(text)
        if head.startswith("{"):
            fmt = "json"
        elif re.match(r"(strict\s+)?graph\b", head, re.IGNORECASE):
            fmt = "dot"
        else:
            fmt = "adjacency"
    if fmt == "json":
        return _parse_json(text)
    if fmt in ("adjacency", "adj", "edgelist"):
        return _parse_adjacency(text)
    if fmt in ("dot", "dot-subset", "gv"):
        return _parse_dot(text)
    raise ValueError(f"unknown graph format {format!r}")


def load_graph(path, format: str = "auto") -> CoxeterGraph:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if format == "auto":
        suffix = str(path).rsplit(".", 1)[-1].lower() if "." in str(path) else ""
        format = {"json": "json", "dot": "dot", "gv": "dot", "adj": "adjacency",
                  "txt": "adjacency"}.get(suffix, "auto")
    return parse_graph(text, format)


def dump_graph(g: CoxeterGraph, format: str = "json") -> str:
    if format == "json":
        return json.dumps(g.to_dict())
    if format == "adjacency":
        lines, order = [], []
        for u, v, m in g.edge_list():
            lines.append(f"{u} {v}" if m == 2 else f"{u} {v} {m}")
            order += [x for x in (u, v) if x not in order]
        # lone-vertex lines pin the declaration order when edges alone would not
        head = [] if order == list(g.vertices) else list(g.vertices)
        return "\n".join(head + lines) + "\n"
    if format == "dot":
        body = [f"  {_dot_id(v)};" for v in g.vertices]
        for u, v, m in g.edge_list():
            attr = "" if m == 2 else f" [label={m}]"
            body.append(f"  {_dot_id(u)} -- {_dot_id(v)}{attr};")
        return "graph G {\n" + "\n".join(body) + "\n}\n"
    raise ValueError(f"unknown graph format {format!r}")


def _dot_id(name: str) -> str:
    return name if re.fullmatch(r"[A-Za-z_0-9]+", name) else json.dumps(name)


def _strip_leading_comments(text: str) -> str:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith(("#", "//"))]
    return "\n".join(lines).lstrip()


def _build(vertices, edges, where) -> CoxeterGraph:
    """Construct a graph, mapping invariant violations onto positioned parse errors."""
    seen = set()
    for v in vertices:
        if v in seen:
            raise GraphParseError(f"duplicate vertex {v!r}", *where.get(("v", v), (0, 0)))
        seen.add(v)
    keys = set()
    for k, (u, v, m) in enumerate(edges):
        pos = where.get(("ei", k)) or where.get(("e", u, v), (0, 0))
        if u == v:
            raise GraphParseError(f"self-loop at {u!r}", *pos)
        if m < 2:
            raise GraphParseError(f"edge label must be >= 2, got {m}", *pos)
        key = frozenset((u, v))
        if key in keys:
            raise GraphParseError(f"duplicate edge {u!r}-{v!r}", *pos)
        keys.add(key)
        for x in (u, v):
            if x not in seen:
                raise GraphParseError(f"edge endpoint {x!r} is not a declared vertex", *pos)
    return CoxeterGraph(vertices, edges)


def _parse_label(tok: str, line: int, col: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphParseError(f"edge label must be an integer, got {tok!r}", line, col) from None


def _parse_adjacency(text: str) -> CoxeterGraph:
    vertices: list[str] = []
    declared: set[str] = set()
    edges = []
    where: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        toks = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", body)]
        if not toks:
            continue
        if len(toks) > 3:
            raise GraphParseError("expected 'u v [label]' or a single vertex", lineno, toks[3][1])
        for name, col in toks[:2]:
            if name not in declared:
                declared.add(name)
                vertices.append(name)
        if len(toks) == 1:
            continue
        (u, ucol), (v, _) = toks[0], toks[1]
        m = _parse_label(toks[2][0], lineno, toks[2][1]) if len(toks) == 3 else 2
        edges.append((u, v, m))
        where[("ei", len(edges) - 1)] = (lineno, ucol)
    return _build(vertices, edges, where)


def _line_col(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    return line, offset - (text.rfind("\n", 0, offset) + 1) + 1


def _json_where(text: str, verts, n_edges: int) -> dict:
    """Best-effort source positions for vertex names and edge arrays."""
    where: dict = {}
    k = text.find('"vertices"')
    if k >= 0:
        pos = k + len('"vertices"')
        for v in verts:
            tok = json.dumps(v)
            j = text.find(tok, pos)
            if j < 0:
                break
            where.setdefault(("v", v), _line_col(text, j))
            where[("v", v, "last")] = _line_col(text, j)
            pos = j + len(tok)
    k = text.find('"edges"')
    if k >= 0:
        start = text.find("[", k)
        pos = start + 1
        for i in range(n_edges):
            j = text.find("[", pos)
            if j < 0:
                break
            where[("edge", i)] = _line_col(text, j)
            pos = j + 1
    return where


def _parse_json(text: str) -> CoxeterGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict) or "vertices" not in data:
        raise GraphParseError("expected an object with a 'vertices' list", 1, 1)
    verts = data["vertices"]
    if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
        raise GraphParseError("'vertices' must be a list of strings", 1, 1)
    raw = data.get("edges", [])
    if not isinstance(raw, list):
        raise GraphParseError("'edges' must be a list", 1, 1)
    where = _json_where(text, verts, len(raw))
    edges = []
    for i, e in enumerate(raw):
        pos = where.get(("edge", i), (1, 1))
        if not isinstance(e, list) or len(e) not in (2, 3):
            raise GraphParseError(f"edge #{i} must be [u, v] or [u, v, label]", *pos)
        if not all(isinstance(x, str) for x in e[:2]):
            raise GraphParseError(f"edge #{i}: endpoints must be strings", *pos)
        m = e[2] if len(e) == 3 else 2
        if isinstance(m, bool) or not isinstance(m, int):
            raise GraphParseError(f"edge #{i}: label must be an integer", *pos)
        edges.append((e[0], e[1], m))
        where[("ei", i)] = pos
    seen = set()
    for v in verts:
        if v in seen:
            where[("v", v)] = where.get(("v", v, "last"), (1, 1))
        seen.add(v)
    return _build(verts, edges, where)


_DOT_TOKEN = re.compile(
    r"""(?P<ws>\s+)|(?P<comment>//[^\n]*|\#[^\n]*|/\*.*?\*/)|(?P<edge>--|->)
    |(?P<punct>[{}\[\];,=])|(?P<str>"(?:[^"\\]|\\.)*")|(?P<id>[A-Za-z_0-9.\-]+)""",
    re.VERBOSE | re.DOTALL,
)


def _dot_tokens(text: str):
    pos = 0
    line, line_start = 1, 0
    while pos < len(text):
        m = _DOT_TOKEN.match(text, pos)
        if m is None:
            raise GraphParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        col = pos - line_start + 1
        if kind not in ("ws", "comment"):
            val = m.group()
            if kind == "str":
                val = json.loads(val)
            yield kind, val, line, col
        chunk = m.group()
        nl = chunk.count("\n")
        if nl:
            line += nl
            line_start = pos + chunk.rfind("\n") + 1
        pos = m.end()
    yield "eof", "", line, pos - line_start + 1


def _parse_dot(text: str) -> CoxeterGraph:
    """Undirected DOT subset: node/edge statements, edge chains, ``label=`` for m."""
    toks = list(_dot_tokens(text))
    i = 0

    def peek():
        return toks[i]

    def take(kind=None, value=None):
        nonlocal i
        k, v, ln, col = toks[i]
        if (kind and k != kind) or (value is not None and v != value):
            want = value if value is not None else kind
            raise GraphParseError(f"expected {want!r}, found {v or k!r}", ln, col)
        i += 1
        return toks[i - 1]

    k, v, ln, col = peek()
    if k == "id" and v.lower() == "strict":
        take()
        k, v, ln, col = peek()
    if k == "id" and v.lower() == "digraph":
        raise GraphParseError("directed graphs are not supported", ln, col)
    if not (k == "id" and v.lower() == "graph"):
        raise GraphParseError("expected 'graph'", ln, col)
    take()
    if peek()[0] in ("id", "str"):
        take()
    take("punct", "{")

    vertices: list[str] = []
    known: set[str] = set()
    explicit: set[str] = set()
    edges = []
    where: dict = {}

    def touch(name):
        if name not in known:
            known.add(name)
            vertices.append(name)

    def attrs():
        out = {}
        if peek()[1] != "[":
            return out
        take("punct", "[")
        while peek()[1] != "]":
            kk, key, kln, kcol = peek()
            if kk not in ("id", "str"):
                raise GraphParseError(f"expected attribute name, found {key!r}", kln, kcol)
            take()
            take("punct", "=")
            vk, val, vln, vcol = peek()
            if vk not in ("id", "str"):
                raise GraphParseError(f"expected attribute value, found {val!r}", vln, vcol)
            take()
            out[key] = (val, vln, vcol)
            if peek()[1] in (",", ";"):
                take()
        take("punct", "]")
        return out

    while peek()[1] != "}":
        k, v, ln, col = peek()
        if k == "eof":
            raise GraphParseError("unexpected end of input, missing '}'", ln, col)
        if k == "punct" and v == ";":
            take()
            continue
        if k not in ("id", "str"):
            raise GraphParseError(f"unexpected token {v!r}", ln, col)
        if k == "id" and v.lower() in ("node", "edge", "graph") and toks[i + 1][1] == "[":
            take()
            attrs()
            continue
        take()
        chain = [(v, ln, col)]
        while peek()[0] == "edge":
            ek, ev, eln, ecol = take()
            if ev == "->":
                raise GraphParseError("directed edge '->' in undirected graph", eln, ecol)
            nk, nv, nln, ncol = peek()
            if nk not in ("id", "str"):
                raise GraphParseError(f"expected vertex after '--', found {nv!r}", nln, ncol)
            take()
            chain.append((nv, nln, ncol))
        a = attrs()
        if len(chain) == 1:
            name = chain[0][0]
            if name in explicit:
                raise GraphParseError(f"duplicate vertex {name!r}", ln, col)
            explicit.add(name)
            touch(name)
        else:
            m = 2
            if "label" in a:
                lv, lln, lcol = a["label"]
                m = _parse_label(lv, lln, lcol)
            for name, _, _ in chain:
                touch(name)
            for (u, uln, ucol), (w, _, _) in zip(chain, chain[1:]):
                edges.append((u, w, m))
                where.setdefault(("e", u, w), (uln, ucol))
        if peek()[1] == ";":
            take()
    take("punct", "}")
    k, v, ln, col = peek()
    if k != "eof":
        raise GraphParseError(f"trailing content {v!r}", ln, col)
    return _build(vertices, edges, where)


# -- elementary combinatorics -------------------------------------------------


def complement(g: CoxeterGraph) -> CoxeterGraph:
    """Unlabeled complement on the same vertex set; every output edge has label 2."""
    edges = [(u, v) for u, v in combinations(g.vertices, 2) if not g.adjacent(u, v)]
    return CoxeterGraph(g.vertices, edges)


def induced_subgraph(g: CoxeterGraph, keep: Iterable[str]) -> CoxeterGraph:
    keep = set(keep)
    verts = [v for v in g.vertices if v in keep]
    edges = [(u, v, m) for u, v, m in g.edge_list() if u in keep and v in keep]
    return CoxeterGraph(verts, edges)


def _components_from_masks(masks: Sequence[int], n: int) -> list[int]:
    comps = []
    left = (1 << n) - 1
    while left:
        start = left & -left
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= masks[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        left &= ~comp
    return comps


def connected_components(g: CoxeterGraph) -> list[list[str]]:
    """Components as vertex lists, ordered by their first vertex."""
    return [_names(g, c) for c in _components_from_masks(g.adj_mask, len(g))]


def _complement_masks(g: CoxeterGraph) -> list[int]:
    full = (1 << len(g)) - 1
    return [full & ~m & ~(1 << i) for i, m in enumerate(g.adj_mask)]


def is_nontrivial_join(g: CoxeterGraph) -> tuple[bool, tuple[list[str], list[str]] | None]:
    """Decide whether ``g`` splits as ``A * B`` with every A-B pair adjacent.

    The witness is the complement component holding the first vertex versus
    everything else.

    >>> is_nontrivial_join(cycle_graph(4, names="abcd"))
    (True, (['a', 'c'], ['b', 'd']))
    >>> is_nontrivial_join(cycle_graph(5))[0]
    False
    """
    if len(g) < 2:
        return False, None
    comps = _components_from_masks(_complement_masks(g), len(g))
    if len(comps) < 2:
        return False, None
    a = comps[0]
    b = ((1 << len(g)) - 1) & ~a
    return True, (_names(g, a), _names(g, b))


def reduce_cone_vertices(g: CoxeterGraph) -> tuple[CoxeterGraph, list[str]]:
    """Drop the vertices adjacent to every other vertex (isolated in the complement)."""
    n = len(g)
    full = (1 << n) - 1
    removed = [v for i, v in enumerate(g.vertices) if g.adj_mask[i] == full & ~(1 << i)]
    if not removed:
        return g, []
    return induced_subgraph(g, set(g.vertices) - set(removed)), removed


def neighborhood(g: CoxeterGraph, v: str) -> tuple[set[str], set[str]]:
    """``(link, star)`` of ``v``."""
    link = set(_names(g, g.adj_mask[g.index(v)]))
    return link, link | {v}


@dataclass(frozen=True)
class Square:
    """Induced 4-cycle; ``vertices`` in vertex order, ``diagonals`` the two non-edges."""

    vertices: tuple[str, str, str, str]
    diagonals: tuple[tuple[str, str], tuple[str, str]]

    @property
    def support(self) -> frozenset:
        return frozenset(self.vertices)


def _square_masks(g: CoxeterGraph) -> list[tuple[int, int]]:
    """Induced squares as sorted ``(diag1_mask, diag2_mask)`` pairs, no duplicates."""
    adj = g.adj_mask
    n = len(g)
    found = set()
    for u in range(n):
        for v in range(u + 1, n):
            if adj[u] >> v & 1:
                continue
            common = adj[u] & adj[v]
            if common & (common - 1) == 0:
                continue
            cs = []
            c = common
            while c:
                low = c & -c
                cs.append(low.bit_length() - 1)
                c ^= low
            d1 = (1 << u) | (1 << v)
            for a, b in combinations(cs, 2):
                if not adj[a] >> b & 1:
                    d2 = (1 << a) | (1 << b)
                    found.add((d1, d2) if d1 < d2 else (d2, d1))
    return sorted(found, key=lambda p: _bits(p[0] | p[1]))


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def enumerate_induced_squares(g: CoxeterGraph) -> list[Square]:
    """All induced squares, ordered by their sorted vertex indices.

    Labels are ignored: any edge counts as an edge.
    """
    out = []
    for d1, d2 in _square_masks(g):
        verts = tuple(g.vertices[i] for i in _bits(d1 | d2))
        p1 = tuple(g.vertices[i] for i in _bits(d1))
        p2 = tuple(g.vertices[i] for i in _bits(d2))
        out.append(Square(verts, tuple(sorted((p1, p2), key=lambda p: g.index(p[0])))))
    return out


@dataclass(frozen=True)
class SquareGraph:
    """Square graph: nodes are induced squares, adjacent iff they share a diagonal."""

    nodes: tuple[Square, ...]
    adjacency: tuple[tuple[int, int], ...]

    def neighbors(self, i: int) -> list[int]:
        return sorted({b if a == i else a for a, b in self.adjacency if i in (a, b)})

    def components(self) -> list[list[int]]:
        """Connected components as sorted node-index lists, ordered by smallest index."""
        parent = list(range(len(self.nodes)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.adjacency:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        groups: dict[int, list[int]] = {}
        for i in range(len(self.nodes)):
            groups.setdefault(find(i), []).append(i)
        return sorted(groups.values(), key=lambda c: c[0])

    def support(self, component: Iterable[int]) -> frozenset:
        out: set[str] = set()
        for i in component:
            out |= self.nodes[i].support
        return frozenset(out)


def square_graph(g: CoxeterGraph) -> SquareGraph:
    squares = enumerate_induced_squares(g)
    by_diag: dict[tuple[str, str], list[int]] = {}
    for i, sq in enumerate(squares):
        for d in sq.diagonals:
            by_diag.setdefault(d, []).append(i)
    adj = set()
    for members in by_diag.values():
        for a, b in combinations(members, 2):
            adj.add((a, b))
    return SquareGraph(tuple(squares), tuple(sorted(adj)))


def all_pairs_distances(g: CoxeterGraph) -> np.ndarray:
    """Hop distances as a float array; ``inf`` between components."""
    n = len(g)
    dist = np.full((n, n), np.inf)
    adj = g.adj_mask
    for s in range(n):
        seen = 1 << s
        frontier = seen
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


# -- named families -----------------------------------------------------------


def _labels(n: int, names) -> list[str]:
    if names is None:
        return [str(i) for i in range(1, n + 1)]
    names = list(names)
    if len(names) != n:
        raise ValueError(f"need {n} names, got {len(names)}")
    return [str(x) for x in names]


def cycle_graph(n: int, names=None) -> CoxeterGraph:
    """``n``-cycle on vertices ``1..n`` (or ``names``), edges between neighbours."""
    vs = _labels(n, names)
    return CoxeterGraph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def path_graph(n: int, names=None, label: int = 2) -> CoxeterGraph:
    vs = _labels(n, names)
    return CoxeterGraph(vs, [(vs[i], vs[i + 1], label) for i in range(n - 1)])


def complete_graph(n: int, names=None) -> CoxeterGraph:
    vs = _labels(n, names)
    return CoxeterGraph(vs, list(combinations(vs, 2)))


def edgeless_graph(n: int, names=None) -> CoxeterGraph:
    return CoxeterGraph(_labels(n, names))


def pair_ladder(k: int = 4) -> CoxeterGraph:
    """``k`` pairs ``P_i = {2i-1, 2i}`` with all edges between consecutive pairs.

    ``pair_ladder(4)`` is the eight-vertex graph used throughout the tests as
    the standard CFS, non-join example.
    """
    vs = [str(i) for i in range(1, 2 * k + 1)]
    pairs = [vs[2 * i: 2 * i + 2] for i in range(k)]
    edges = [(a, b) for p, q in zip(pairs, pairs[1:]) for a in p for b in q]
    return CoxeterGraph(vs, edges)
