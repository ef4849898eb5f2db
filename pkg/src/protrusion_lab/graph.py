"""Simple graphs, t-boundaried graphs and the operations on them.

Vertices are the integers ``0..n-1``. Edges are stored as sorted pairs
``(u, v)`` with ``u < v``. A boundaried graph additionally carries a tuple
``boundary`` whose entry ``i - 1`` is the vertex carrying label ``i``.

Subsets of the boundary are passed around as integer masks: bit ``i - 1``
is set iff label ``i`` is in the subset.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for structurally invalid graphs or incompatible operands."""


def _normalize_edges(n: int, edges: Iterable[Sequence[int]]) -> frozenset:
    out = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {(u, v)} has an endpoint outside 0..{n - 1}")
        out.add((u, v) if u < v else (v, u))
    return frozenset(out)


@dataclass(frozen=True)
class Graph:
    """An undirected simple graph on vertices ``0..n-1``."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        object.__setattr__(self, "edges", _normalize_edges(self.n, self.edges))

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhood of every vertex as a bitmask."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        nb = [[] for _ in range(self.n)]
        for u, v in sorted(self.edges):
            nb[u].append(v)
            nb[v].append(u)
        return tuple(tuple(sorted(x)) for x in nb)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.adjacency[v]]

    def is_independent(self, vertices: Iterable[int]) -> bool:
        mask = 0
        for v in vertices:
            mask |= 1 << v
        return all(not (self.adjacency[v] & mask) for v in iter_bits(mask))

    def induced(self, keep: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``keep`` plus the map new id -> old id."""
        old = sorted(set(keep))
        pos = {v: i for i, v in enumerate(old)}
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph(len(old), edges), old


@dataclass(frozen=True)
class BoundariedGraph(Graph):
    """A simple graph with ``t`` distinct labelled boundary vertices."""

    boundary: tuple = ()

    def __post_init__(self):
        super().__post_init__()
        b = tuple(int(x) for x in self.boundary)
        object.__setattr__(self, "boundary", b)
        if len(b) < 1:
            raise GraphError("a boundaried graph needs at least one boundary vertex")
        if len(set(b)) != len(b):
            raise GraphError("boundary vertices must be distinct")
        if any(not 0 <= x < self.n for x in b):
            raise GraphError("boundary vertex outside the vertex range")

    @property
    def t(self) -> int:
        return len(self.boundary)

    @cached_property
    def boundary_mask(self) -> int:
        m = 0
        for x in self.boundary:
            m |= 1 << x
        return m

    def boundary_vertices(self, s: int) -> list[int]:
        """Vertices whose labels are in the subset mask ``s``."""
        return [self.boundary[i] for i in range(self.t) if s >> i & 1]

    def boundary_is_independent(self) -> bool:
        return self.is_independent(self.boundary)

    def unboundaried(self) -> Graph:
        return Graph(self.n, self.edges)


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_size(mask: int) -> int:
    return bin(mask).count("1")


def mask_labels(mask: int) -> list[int]:
    """Labels (1-based) contained in a subset mask."""
    return [i + 1 for i in iter_bits(mask)]


def labels_mask(labels: Iterable[int]) -> int:
    m = 0
    for i in labels:
        m |= 1 << (int(i) - 1)
    return m


def check_mask(t: int, s: int) -> int:
    if not 0 <= s < (1 << t):
        raise GraphError(f"subset mask {s} out of range for t={t}")
    return s


# -- operations ---------------------------------------------------------------

def glue(g: BoundariedGraph, h: BoundariedGraph) -> BoundariedGraph:
    """Glue two t-boundaried graphs along equally labelled boundary vertices.

    Vertices of ``g`` keep their ids; the non-boundary vertices of ``h`` are
    appended in increasing id order. Parallel edges collapse.
    """
    if g.t != h.t:
        raise GraphError(f"boundary sizes differ: {g.t} != {h.t}")
    hmap = {}
    for i, x in enumerate(h.boundary):
        hmap[x] = g.boundary[i]
    nxt = g.n
    for x in range(h.n):
        if x not in hmap:
            hmap[x] = nxt
            nxt += 1
    edges = set(g.edges)
    edges.update((hmap[u], hmap[v]) for u, v in h.edges)
    return BoundariedGraph(nxt, edges, g.boundary)


def indicator_graph(t: int, s: int) -> BoundariedGraph:
    """Boundary vertices outside ``s`` each get two pendant leaves."""
    check_mask(t, s)
    edges = []
    nxt = t
    for i in range(t):
        if not s >> i & 1:
            edges.append((i, nxt))
            edges.append((i, nxt + 1))
            nxt += 2
    return BoundariedGraph(nxt, edges, tuple(range(t)))


def triangle_transform(g: Graph) -> Graph:
    """Add one private vertex per edge, adjacent to both endpoints.

    New vertices are numbered from ``g.n`` in sorted edge order. The boundary
    (if any) is unchanged.
    """
    edges = set(g.edges)
    nxt = g.n
    for u, v in sorted(g.edges):
        edges.add((u, nxt))
        edges.add((v, nxt))
        nxt += 1
    if isinstance(g, BoundariedGraph):
        return BoundariedGraph(nxt, edges, g.boundary)
    return Graph(nxt, edges)


def disjoint_union(a: Graph, b: Graph) -> tuple[Graph, int]:
    """Disjoint union; vertices of ``b`` are shifted by the returned offset."""
    off = a.n
    edges = set(a.edges) | {(u + off, v + off) for u, v in b.edges}
    return Graph(a.n + b.n, edges), off


def add_isolated(g: BoundariedGraph, k: int = 1) -> BoundariedGraph:
    return BoundariedGraph(g.n + k, g.edges, g.boundary)


# -- named small graphs --------------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def with_boundary(g: Graph, boundary: Sequence[int]) -> BoundariedGraph:
    return BoundariedGraph(g.n, g.edges, tuple(boundary))


# -- isomorphism and canonical forms ------------------------------------------

def _refine_colors(g: Graph, colors: list[int]) -> list[int]:
    """Colour refinement (1-WL) starting from ``colors``."""
    while True:
        sig = [(colors[v], tuple(sorted(colors[w] for w in g.neighbors[v]))) for v in range(g.n)]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [palette[s] for s in sig]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _initial_colors(g: Graph) -> list[int]:
    cols = [0] * g.n
    if isinstance(g, BoundariedGraph):
        for i, x in enumerate(g.boundary):
            cols[x] = i + 1
    return cols


def boundary_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism test that must map boundary label ``i`` to label ``i``.

    Exact backtracking, pruned by colour refinement. Plain graphs are
    compared without any fixed vertices.
    """
    gb = isinstance(g, BoundariedGraph)
    if gb != isinstance(h, BoundariedGraph):
        return False
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    if gb and g.t != h.t:
        return False
    # refine both graphs jointly so colour ids are comparable
    union, off = disjoint_union(g, h)
    init = _initial_colors(g) + _initial_colors(h)
    cols = _refine_colors(union, init)
    cg, ch = cols[:g.n], cols[off:]
    if sorted(cg) != sorted(ch):
        return False
    mapping = {}
    if gb:
        for i in range(g.t):
            mapping[g.boundary[i]] = h.boundary[i]
        for x, y in mapping.items():
            if cg[x] != ch[y]:
                return False
    order = sorted((v for v in range(g.n) if v not in mapping),
                   key=lambda v: (sum(1 for c in cg if c == cg[v]), v))
    used = set(mapping.values())

    def consistent(x, y):
        for w in g.neighbors[x]:
            if w in mapping and not h.has_edge(y, mapping[w]):
                return False
        cnt = sum(1 for w in g.neighbors[x] if w in mapping)
        return cnt == sum(1 for w in h.neighbors[y] if w in used)

    for x, y in mapping.items():
        for x2, y2 in mapping.items():
            if x < x2 and g.has_edge(x, x2) != h.has_edge(y, y2):
                return False

    def extend(k):
        if k == len(order):
            return True
        x = order[k]
        for y in range(h.n):
            if y in used or ch[y] != cg[x] or not consistent(x, y):
                continue
            mapping[x] = y
            used.add(y)
            if extend(k + 1):
                return True
            del mapping[x]
            used.discard(y)
        return False

    return extend(0)


def canonical_form(g: Graph) -> tuple:
    """Lexicographically minimal edge encoding over boundary-fixing relabelings.

    Boundary vertex with label ``i`` is sent to position ``i - 1``; the
    remaining vertices are permuted over all orders. Only for small graphs.
    """
    fixed = list(g.boundary) if isinstance(g, BoundariedGraph) else []
    rest = [v for v in range(g.n) if v not in set(fixed)]
    best = None
    for perm in itertools.permutations(rest):
        pos = {v: i for i, v in enumerate(fixed + list(perm))}
        code = tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in g.edges))
        if best is None or code < best:
            best = code
    return (g.n, len(fixed), best)


# -- serialization -------------------------------------------------------------

def to_dict(g: Graph) -> dict:
    b = list(g.boundary) if isinstance(g, BoundariedGraph) else []
    return {"t": len(b), "n": g.n, "boundary": b,
            "edges": [list(e) for e in g.sorted_edges()]}


def from_dict(d: dict) -> Graph:
    try:
        n = int(d["n"])
        edges = d["edges"]
        t = int(d.get("t", len(d.get("boundary", []))))
        boundary = list(d.get("boundary", []))
    except (KeyError, TypeError) as exc:
        raise GraphError(f"malformed graph document: {exc}") from None
    for e in edges:
        if len(e) != 2 or not e[0] < e[1]:
            raise GraphError(f"edge {e} must be a pair [u, v] with u < v")
    if len(boundary) != t:
        raise GraphError("boundary length does not match t")
    if t == 0:
        return Graph(n, edges)
    return BoundariedGraph(n, edges, tuple(boundary))


def to_json(g: Graph) -> str:
    return json.dumps(to_dict(g), sort_keys=True)


def from_json(text: str) -> Graph:
    return from_dict(json.loads(text))


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    labels = {}
    if isinstance(g, BoundariedGraph):
        labels = {x: i + 1 for i, x in enumerate(g.boundary)}
    for v in range(g.n):
        if v in labels:
            lines.append(f'  {v} [shape=doublecircle,label="b{labels[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.sorted_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
