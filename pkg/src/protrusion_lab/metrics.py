"""Planarity, exact pathwidth, and the mixed search game."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import networkx as nx
import numpy as np

from .graph import Graph
from .oracle import CapacityError

PATHWIDTH_LIMIT = 20


# -- planarity ----------------------------------------------------------------

def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def is_planar(g: Graph) -> bool:
    """Left-right planarity test; boundary labels play no role."""
    planar, _ = nx.check_planarity(to_networkx(g))
    return planar


def satisfies_euler_bound(g: Graph) -> bool:
    """Necessary condition for planarity: |E| <= 3n - 6 when n >= 3."""
    return g.n < 3 or len(g.edges) <= 3 * g.n - 6


def _has_k5_or_k33(verts: list[int], adj: dict) -> bool:
    for five in itertools.combinations(verts, 5):
        if all(b in adj[a] for a, b in itertools.combinations(five, 2)):
            return True
    for six in itertools.combinations(verts, 6):
        first = six[0]
        for pair in itertools.combinations(six[1:], 2):
            left = (first,) + pair
            right = tuple(x for x in six if x not in left)
            if all(b in adj[a] for a in left for b in right):
                return True
    return False


def is_planar_bruteforce(g: Graph) -> bool:
    """Planarity by searching for a K5 or K3,3 minor (Wagner).

    Every contraction of ``g`` is explored and checked for a K5 or K3,3
    subgraph. Exponential; intended as a cross-check for n <= 8.
    """
    if g.n > 9:
        raise CapacityError("brute-force minor search limited to 9 vertices")
    seen = set()

    def nonplanar(edges: frozenset) -> bool:
        if edges in seen:
            return False
        seen.add(edges)
        adj: dict = {}
        for u, v in edges:
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        verts = sorted(adj)
        if len(verts) >= 3 and len(edges) > 3 * len(verts) - 6:
            return True
        if len(verts) < 5:
            return False
        if _has_k5_or_k33(verts, adj):
            return True
        for u, v in edges:
            merged = set()
            for a, b in edges:
                a2 = u if a == v else a
                b2 = u if b == v else b
                if a2 != b2:
                    merged.add((min(a2, b2), max(a2, b2)))
            if nonplanar(frozenset(merged)):
                return True
        return False

    return not nonplanar(frozenset(g.edges))


# -- pathwidth ----------------------------------------------------------------

def pathwidth_exact(g: Graph) -> int:
    """Exact pathwidth via the vertex separation number.

    Dynamic programme over vertex subsets S (the prefix of a linear layout):
    ``best(S) = max(|boundary(S)|, min_v best(S - v))`` where boundary(S) are
    the vertices of S with a neighbour outside S.
    """
    n = g.n
    if n > PATHWIDTH_LIMIT:
        raise CapacityError(f"exact pathwidth limited to {PATHWIDTH_LIMIT} vertices, got {n}")
    if n <= 1 or not g.edges:
        return 0
    size = 1 << n
    subsets = np.arange(size, dtype=np.int64)
    bnd = np.zeros(size, dtype=np.int8)
    for v, a in enumerate(g.adjacency):
        inside = (subsets >> v) & 1
        leaks = (subsets & a) != a
        bnd += (inside.astype(bool) & leaks).astype(np.int8)
    popcnt = np.zeros(size, dtype=np.int8)
    for v in range(n):
        popcnt += ((subsets >> v) & 1).astype(np.int8)
    best = np.zeros(size, dtype=np.int8)
    big = np.int8(n + 1)
    for k in range(1, n + 1):
        layer = subsets[popcnt == k]
        m = np.full(layer.shape, big, dtype=np.int8)
        for v in range(n):
            has = ((layer >> v) & 1).astype(bool)
            prev = best[layer ^ (1 << v)]
            m = np.where(has, np.minimum(m, prev), m)
        best[layer] = np.maximum(bnd[layer], m)
    return int(best[size - 1])


def vertex_separation(g: Graph, order: Sequence[int]) -> int:
    """Width of the path decomposition induced by a linear layout."""
    pos = {v: i for i, v in enumerate(order)}
    if len(pos) != g.n:
        raise ValueError("ordering must list every vertex exactly once")
    last = [pos[v] for v in range(g.n)]
    for v in range(g.n):
        for w in g.neighbors[v]:
            last[v] = max(last[v], pos[w])
    width = 0
    for i in range(g.n):
        width = max(width, sum(1 for v in order[: i + 1] if last[v] > i))
    return width


# -- mixed search -------------------------------------------------------------

@dataclass(frozen=True)
class Place:
    v: int


@dataclass(frozen=True)
class Remove:
    v: int


@dataclass(frozen=True)
class Slide:
    src: int
    dst: int


Move = Union[Place, Remove, Slide]


class IllegalMoveError(ValueError):
    def __init__(self, index: int, reason: str):
        super().__init__(f"move {index}: {reason}")
        self.index = index


@dataclass(frozen=True)
class CleaningSchedule:
    moves: tuple

    def __len__(self):
        return len(self.moves)

    def to_dict(self) -> dict:
        out = []
        for m in self.moves:
            if isinstance(m, Place):
                out.append({"op": "place", "v": m.v})
            elif isinstance(m, Remove):
                out.append({"op": "remove", "v": m.v})
            else:
                out.append({"op": "slide", "from": m.src, "to": m.dst})
        return {"moves": out}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "CleaningSchedule":
        moves = []
        for i, m in enumerate(d["moves"]):
            op = m.get("op")
            if op == "place":
                moves.append(Place(int(m["v"])))
            elif op == "remove":
                moves.append(Remove(int(m["v"])))
            elif op == "slide":
                moves.append(Slide(int(m["from"]), int(m["to"])))
            else:
                raise ValueError(f"move {i}: unknown op {op!r}")
        return cls(tuple(moves))


@dataclass(frozen=True)
class SearchOutcome:
    cleaned: bool
    max_cleaners: int
    recontaminations: int
    clean_edges: int = 0

    def to_dict(self) -> dict:
        return {"cleaned": self.cleaned, "max_cleaners": self.max_cleaners,
                "recontaminations": self.recontaminations, "clean_edges": self.clean_edges}


def simulate_mixed_search(g: Graph, sched: CleaningSchedule | Iterable[Move]) -> SearchOutcome:
    """Play a cleaning schedule on ``g``.

    After every move, edges with both endpoints guarded (or the edge a cleaner
    slid along) become clean; then contamination spreads from contaminated
    edges to clean edges through every unguarded vertex.
    """
    moves = sched.moves if isinstance(sched, CleaningSchedule) else tuple(sched)
    guarded: set[int] = set()
    clean: set[tuple[int, int]] = set()
    peak = 0
    recont = 0
    nbrs = g.neighbors

    def key(a, b):
        return (a, b) if a < b else (b, a)

    for idx, mv in enumerate(moves):
        freed = None
        if isinstance(mv, Place):
            if not 0 <= mv.v < g.n:
                raise IllegalMoveError(idx, f"vertex {mv.v} does not exist")
            if mv.v in guarded:
                raise IllegalMoveError(idx, f"vertex {mv.v} already holds a cleaner")
            guarded.add(mv.v)
            for w in nbrs[mv.v]:
                if w in guarded:
                    clean.add(key(mv.v, w))
        elif isinstance(mv, Remove):
            if mv.v not in guarded:
                raise IllegalMoveError(idx, f"no cleaner on vertex {mv.v}")
            guarded.discard(mv.v)
            freed = mv.v
        elif isinstance(mv, Slide):
            if mv.src not in guarded:
                raise IllegalMoveError(idx, f"no cleaner on vertex {mv.src}")
            if not g.has_edge(mv.src, mv.dst):
                raise IllegalMoveError(idx, f"{mv.src}-{mv.dst} is not an edge")
            if mv.dst in guarded:
                raise IllegalMoveError(idx, f"vertex {mv.dst} already holds a cleaner")
            guarded.discard(mv.src)
            guarded.add(mv.dst)
            clean.add(key(mv.src, mv.dst))
            for w in nbrs[mv.dst]:
                if w in guarded:
                    clean.add(key(mv.dst, w))
            freed = mv.src
        else:
            raise IllegalMoveError(idx, f"unknown move {mv!r}")
        peak = max(peak, len(guarded))
        if freed is not None:
            recont += _recontaminate(g, guarded, clean, freed)
    return SearchOutcome(len(clean) == len(g.edges), peak, recont, len(clean))


def _recontaminate(g: Graph, guarded: set, clean: set, freed: int) -> int:
    """Spread contamination after ``freed`` lost its cleaner; returns edges lost."""
    nbrs = g.neighbors

    def key(a, b):
        return (a, b) if a < b else (b, a)

    # only the unguarded region around `freed` can change
    region = {freed}
    stack = [freed]
    while stack:
        x = stack.pop()
        for w in nbrs[x]:
            if w not in guarded and w not in region:
                region.add(w)
                stack.append(w)
    dirty = {x for x in region if any(key(x, w) not in clean for w in nbrs[x])}
    if not dirty:
        return 0
    lost = 0
    stack = list(dirty)
    seen = set(dirty)
    while stack:
        x = stack.pop()
        for w in nbrs[x]:
            e = key(x, w)
            if e in clean:
                clean.discard(e)
                lost += 1
            if w not in guarded and w not in seen:
                seen.add(w)
                stack.append(w)
    return lost


def schedule_from_ordering(g: Graph, order: Sequence[int], slides: bool = True) -> CleaningSchedule:
    """Turn a linear layout into a recontamination-free cleaning schedule.

    Vertices receive cleaners in ``order``; a cleaner is lifted as soon as all
    neighbours of its vertex have been visited. When the next vertex is the
    last unvisited neighbour of a guarded vertex, the cleaner slides over
    instead of a fresh one being placed.
    """
    visited: set[int] = set()
    guarded: set[int] = set()
    pending = [len(g.neighbors[v]) for v in range(g.n)]
    moves: list[Move] = []
    for v in order:
        if v in visited:
            raise ValueError(f"vertex {v} listed twice")
        donor = None
        if slides:
            for w in g.neighbors[v]:
                if w in guarded and pending[w] == 1:
                    donor = w
                    break
        visited.add(v)
        for w in g.neighbors[v]:
            pending[w] -= 1
        if donor is not None:
            moves.append(Slide(donor, v))
            guarded.discard(donor)
        else:
            moves.append(Place(v))
        guarded.add(v)
        for w in sorted(guarded):
            if w != v and pending[w] == 0 and w in visited:
                moves.append(Remove(w))
                guarded.discard(w)
        if pending[v] == 0:
            moves.append(Remove(v))
            guarded.discard(v)
    if len(visited) != g.n:
        raise ValueError("ordering does not cover every vertex")
    return CleaningSchedule(tuple(moves))
