"""Exact solvers for Independent Set, Vertex Cover and Dominating Set, and
boundary functions of t-boundaried graphs.

Three independent engines are available for each problem:

``brute``
    exhaustive subset enumeration, only for tiny graphs; the reference the
    other engines are tested against.
``bnb``
    branch and bound on bitmasks with simple reductions and memoisation.
``frontier``
    dynamic programming along a linear vertex ordering; exact for every
    ordering, fast when the ordering has a narrow frontier (i.e. the graph
    has small pathwidth).

``method="auto"`` splits the graph into components, uses branch and bound on
small ones and the frontier engine on large ones.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import BoundariedGraph, Graph, iter_bits, mask_size

BRUTE_LIMIT = 24
BNB_LIMIT = 60
FRONTIER_LIMIT = 22  # max frontier width for the IS dynamic programme
DS_FRONTIER_LIMIT = 14


class CapacityError(RuntimeError):
    """The instance is beyond what the requested engine can solve exactly."""


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _components(adj: Sequence[int], mask: int) -> list[int]:
    comps = []
    rest = mask
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            nb = 0
            for v in iter_bits(frontier):
                nb |= adj[v]
            frontier = nb & rest & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


# -- linear orderings ---------------------------------------------------------

def greedy_ordering(adj: Sequence[int], mask: int) -> list[int]:
    """Ordering of the vertices in ``mask`` that keeps the frontier small.

    Repeatedly visits the vertex whose addition leaves the fewest visited
    vertices with unvisited neighbours; ties favour vertices with more
    visited neighbours. Starts from a low-degree vertex.
    """
    verts = list(iter_bits(mask))
    if not verts:
        return []
    visited = 0
    order = []
    frontier = 0
    remaining = mask
    start = min(verts, key=lambda v: (_popcount(adj[v] & mask), v))
    cand = 1 << start
    while remaining:
        if not cand:
            cand = 1 << min(iter_bits(remaining), key=lambda v: (_popcount(adj[v] & mask), v))
        best = None
        best_key = None
        for v in iter_bits(cand):
            nv = visited | (1 << v)
            f = frontier | (1 << v)
            # vertices leaving the frontier once v is visited
            size = 0
            for w in iter_bits(f):
                if adj[w] & mask & ~nv:
                    size += 1
            key = (size, -_popcount(adj[v] & visited), _popcount(adj[v] & mask & ~nv), v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        v = best
        order.append(v)
        visited |= 1 << v
        remaining &= ~(1 << v)
        frontier |= 1 << v
        frontier = sum(1 << w for w in iter_bits(frontier) if adj[w] & mask & ~visited)
        cand = 0
        for w in iter_bits(frontier):
            cand |= adj[w]
        cand &= remaining
    return order


def frontier_width(adj: Sequence[int], order: Sequence[int], mask: int | None = None) -> int:
    """Largest number of visited vertices with an unvisited neighbour."""
    if mask is None:
        mask = sum(1 << v for v in order)
    visited = 0
    width = 0
    front = 0
    for v in order:
        visited |= 1 << v
        front |= 1 << v
        front = sum(1 << w for w in iter_bits(front) if adj[w] & mask & ~visited)
        width = max(width, _popcount(front))
    return width


# -- independent set ----------------------------------------------------------

def _mis_brute(adj: Sequence[int], mask: int) -> int:
    verts = list(iter_bits(mask))
    if len(verts) > BRUTE_LIMIT:
        raise CapacityError(f"exhaustive search limited to {BRUTE_LIMIT} vertices")
    best = 0
    k = len(verts)
    for bits in range(1 << k):
        if _popcount(bits) <= best:
            continue
        chosen = 0
        for i in range(k):
            if bits >> i & 1:
                chosen |= 1 << verts[i]
        if all(not (adj[v] & chosen) for v in iter_bits(chosen)):
            best = _popcount(bits)
    return best


def _mis_bnb(adj: Sequence[int], mask: int, memo: dict) -> int:
    if not mask:
        return 0
    hit = memo.get(mask)
    if hit is not None:
        return hit
    taken = 0
    p = mask
    # degree <= 1 vertices are always safe to take
    changed = True
    while changed and p:
        changed = False
        for v in iter_bits(p):
            if not p >> v & 1:
                continue
            if _popcount(adj[v] & p) <= 1:
                taken += 1
                p &= ~(adj[v] | (1 << v))
                changed = True
    if not p:
        memo[mask] = taken
        return taken
    comps = _components(adj, p)
    if len(comps) > 1:
        res = taken + sum(_mis_bnb(adj, c, memo) for c in comps)
        memo[mask] = res
        return res
    v = max(iter_bits(p), key=lambda x: (_popcount(adj[x] & p), -x))
    with_v = 1 + _mis_bnb(adj, p & ~(adj[v] | (1 << v)), memo)
    # the branch without v is only useful if it can still beat with_v
    if _popcount(p) - 1 > with_v:
        without = _mis_bnb(adj, p & ~(1 << v), memo)
    else:
        without = 0
    res = taken + max(with_v, without)
    memo[mask] = res
    return res


def _mis_frontier(adj: Sequence[int], mask: int, order: Sequence[int] | None = None) -> int:
    if order is None:
        order = greedy_ordering(adj, mask)
    else:
        order = [v for v in order if mask >> v & 1]
    width = frontier_width(adj, order, mask)
    if width > FRONTIER_LIMIT:
        raise CapacityError(f"ordering frontier {width} exceeds limit {FRONTIER_LIMIT}")
    visited = 0
    front = 0
    # state: chosen vertices inside the frontier -> best count
    states = {0: 0}
    for v in order:
        bit = 1 << v
        visited |= bit
        front |= bit
        new_front = sum(1 << w for w in iter_bits(front) if adj[w] & mask & ~visited)
        nxt: dict[int, int] = {}
        for chosen, val in states.items():
            k = chosen & new_front
            if nxt.get(k, -1) < val:
                nxt[k] = val
            if not adj[v] & chosen:
                k = (chosen | bit) & new_front
                if nxt.get(k, -1) < val + 1:
                    nxt[k] = val + 1
        states = nxt
        front = new_front
    return max(states.values())


def mis_masked(g: Graph, mask: int | None = None, method: str = "auto",
               order: Sequence[int] | None = None) -> int:
    """Maximum independent set size of ``g`` restricted to the vertices in ``mask``."""
    adj = g.adjacency
    if mask is None:
        mask = (1 << g.n) - 1
    if method == "brute":
        return _mis_brute(adj, mask)
    if method == "bnb":
        if _popcount(mask) > BNB_LIMIT:
            raise CapacityError(f"branch and bound limited to {BNB_LIMIT} vertices")
        return _mis_bnb(adj, mask, {})
    if method == "frontier":
        return _mis_frontier(adj, mask, order)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    total = 0
    for comp in _components(adj, mask):
        size = _popcount(comp)
        if size <= 40:
            total += _mis_bnb(adj, comp, {})
            continue
        sub = [v for v in order if comp >> v & 1] if order is not None else None
        try:
            total += _mis_frontier(adj, comp, sub)
        except CapacityError:
            if size > BNB_LIMIT:
                raise
            total += _mis_bnb(adj, comp, {})
    return total


def max_independent_set(g: Graph, method: str = "auto") -> int:
    return mis_masked(g, None, method)


def min_vertex_cover(g: Graph, method: str = "auto") -> int:
    return g.n - max_independent_set(g, method)


def is_vertex_cover(g: Graph, cover: Iterable[int]) -> bool:
    c = set(cover)
    return all(u in c or v in c for u, v in g.edges)


def constrained_mis(g: Graph, include: Iterable[int] = (), exclude: Iterable[int] = (),
                    method: str = "auto") -> int:
    """Largest independent set containing ``include`` and avoiding ``exclude``.

    Returns ``-1`` when ``include`` itself is not independent.
    """
    inc = 0
    for v in include:
        inc |= 1 << v
    adj = g.adjacency
    if any(adj[v] & inc for v in iter_bits(inc)):
        return -1
    mask = (1 << g.n) - 1
    for v in exclude:
        mask &= ~(1 << v)
    if inc & ~mask:
        return -1
    for v in iter_bits(inc):
        mask &= ~adj[v]
    mask &= ~inc
    return _popcount(inc) + mis_masked(g, mask, method)


# -- dominating set -----------------------------------------------------------

def _closed(adj: Sequence[int]) -> list[int]:
    return [a | (1 << v) for v, a in enumerate(adj)]


def _ds_brute(adj: Sequence[int], n: int) -> int:
    if n > BRUTE_LIMIT:
        raise CapacityError(f"exhaustive search limited to {BRUTE_LIMIT} vertices")
    if n == 0:
        return 0
    closed = _closed(adj)
    full = (1 << n) - 1
    for k in range(1, n + 1):
        for combo in itertools.combinations(range(n), k):
            cov = 0
            for v in combo:
                cov |= closed[v]
            if cov == full:
                return k
    return n


def _ds_bnb(adj: Sequence[int], n: int) -> int:
    closed = _closed(adj)
    full = (1 << n) - 1
    maxcov = max((_popcount(c) for c in closed), default=1)
    best = [n]

    def search(dominated: int, size: int):
        if dominated == full:
            if size < best[0]:
                best[0] = size
            return
        undom = full & ~dominated
        lb = -(-_popcount(undom) // maxcov)
        if size + lb >= best[0]:
            return
        # undominated vertex with the fewest candidate dominators
        pick = min(iter_bits(undom), key=lambda v: (_popcount(closed[v]), v))
        cands = sorted(iter_bits(closed[pick]), key=lambda w: -_popcount(closed[w] & undom))
        for w in cands:
            search(dominated | closed[w], size + 1)

    search(0, 0)
    return best[0]


def _ds_frontier(adj: Sequence[int], n: int, order: Sequence[int] | None = None) -> int:
    mask = (1 << n) - 1
    if order is None:
        order = greedy_ordering(adj, mask)
    width = frontier_width(adj, order, mask)
    if width > DS_FRONTIER_LIMIT:
        raise CapacityError(f"ordering frontier {width} exceeds limit {DS_FRONTIER_LIMIT}")
    visited = 0
    front = 0
    # state: (in_set, dominated) masks restricted to the frontier -> min size
    states = {(0, 0): 0}
    for v in order:
        bit = 1 << v
        visited |= bit
        front |= bit
        new_front = sum(1 << w for w in iter_bits(front) if adj[w] & ~visited)
        leaving = front & ~new_front
        nxt: dict[tuple[int, int], int] = {}
        for (ins, dom), val in states.items():
            # v not in the set
            d = dom | (bit if adj[v] & ins else 0)
            options = [(ins, d, val)]
            # v in the set
            options.append((ins | bit, dom | adj[v] | bit, val + 1))
            for i2, d2, c in options:
                d2 &= visited
                if leaving & ~(d2 | i2):
                    continue
                key = (i2 & new_front, d2 & new_front)
                old = nxt.get(key)
                if old is None or c < old:
                    nxt[key] = c
        states = nxt
        front = new_front
    return min(states.values())


def min_dominating_set(g: Graph, method: str = "auto") -> int:
    adj = g.adjacency
    if method == "brute":
        return _ds_brute(adj, g.n)
    if method == "bnb":
        if g.n > BNB_LIMIT:
            raise CapacityError(f"branch and bound limited to {BNB_LIMIT} vertices")
        return _ds_bnb(adj, g.n)
    if method == "frontier":
        return _ds_frontier(adj, g.n)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    total = 0
    for comp in _components(adj, (1 << g.n) - 1):
        sub, _ = g.induced(iter_bits(comp))
        if sub.n <= 30:
            total += _ds_bnb(sub.adjacency, sub.n)
        else:
            total += _ds_frontier(sub.adjacency, sub.n)
    return total


def is_dominating_set(g: Graph, dom: Iterable[int]) -> bool:
    d = set(dom)
    return all(v in d or any(w in d for w in g.neighbors[v]) for v in range(g.n))


# -- boundary functions -------------------------------------------------------

@dataclass(frozen=True)
class BoundaryFunction:
    """Integer table over boundary subsets, indexed by subset mask."""

    t: int
    values: tuple

    def __post_init__(self):
        vals = tuple(int(x) for x in self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) != 1 << self.t:
            raise ValueError(f"expected {1 << self.t} values for t={self.t}, got {len(vals)}")

    def __getitem__(self, s: int) -> int:
        return self.values[s]

    def to_dict(self) -> dict:
        return {"t": self.t, "values": list(self.values)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "BoundaryFunction":
        return cls(int(d["t"]), tuple(d["values"]))


def boundary_function(g: BoundariedGraph, method: str = "auto",
                      order: Sequence[int] | None = None) -> BoundaryFunction:
    """For every subset S of labels, the largest independent set meeting the
    boundary inside S (one constrained solve per subset).

    ``order`` optionally supplies a narrow vertex ordering for the frontier
    engine; otherwise a greedy one is computed for large graphs.
    """
    full = (1 << g.n) - 1
    vals = []
    if order is None and g.n > 40 and method == "auto":
        order = greedy_ordering(g.adjacency, full)
    for s in range(1 << g.t):
        forbidden = 0
        for i, x in enumerate(g.boundary):
            if not s >> i & 1:
                forbidden |= 1 << x
        vals.append(mis_masked(g, full & ~forbidden, method, order))
    return BoundaryFunction(g.t, tuple(vals))


def boundary_function_brute(g: BoundariedGraph) -> BoundaryFunction:
    """Reference implementation: enumerate every independent set once."""
    if g.n > BRUTE_LIMIT:
        raise CapacityError(f"exhaustive search limited to {BRUTE_LIMIT} vertices")
    adj = g.adjacency
    best = [0] * (1 << g.t)
    pos = {x: i for i, x in enumerate(g.boundary)}
    for bits in range(1 << g.n):
        if any(adj[v] & bits for v in iter_bits(bits)):
            continue
        s = 0
        for v in iter_bits(bits & g.boundary_mask):
            s |= 1 << pos[v]
        size = _popcount(bits)
        if size > best[s]:
            best[s] = size
    # best[s] holds sets meeting the boundary exactly in s; close under subsets
    vals = []
    for s in range(1 << g.t):
        vals.append(max(best[r] for r in range(1 << g.t) if r & ~s == 0))
    return BoundaryFunction(g.t, tuple(vals))


def normalize(f: BoundaryFunction) -> BoundaryFunction:
    base = f.values[0]
    vals = tuple(v - base for v in f.values)
    if any(v < 0 for v in vals):
        raise ValueError("normalized values must be non-negative; input is not a boundary function")
    return BoundaryFunction(f.t, vals)


def glue_optimum(f: BoundaryFunction, h: BoundaryFunction) -> int:
    """max over S of f(S) + h(S) - |S|."""
    if f.t != h.t:
        raise ValueError("boundary sizes differ")
    return max(f[s] + h[s] - mask_size(s) for s in range(1 << f.t))

