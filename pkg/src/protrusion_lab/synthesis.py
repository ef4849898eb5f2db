"""Graphs realizing a prescribed representative function."""
from __future__ import annotations

from .equivalence import RepresentativeFunction, is_representative
from .graph import BoundariedGraph
from .oracle import boundary_function, normalize


def realize_function(f) -> BoundariedGraph:
    """Boundaried graph whose normalized boundary function equals ``f``.

    Vertex ids: boundary v_i = i-1, pendant partners u_i = t+i-1, then for each
    subset S with f(S) > 0 (ascending mask) a block V_S of f(S) false twins.
    A twin of V_S sees u_i for i in S and v_i for i outside S, and every twin
    of every other block. Every value of the raw boundary function is t + f(S).
    """
    if not is_representative(f):
        raise ValueError("realization requires a representative function")
    t = f.t
    edges = [(i, t + i) for i in range(t)]
    blocks = []
    nxt = 2 * t
    for s in range(1 << t):
        k = f.values[s]
        if k > 0:
            blocks.append((s, list(range(nxt, nxt + k))))
            nxt += k
    for s, twins in blocks:
        for x in twins:
            for i in range(t):
                edges.append((t + i, x) if s >> i & 1 else (i, x))
    for a in range(len(blocks)):
        for b in range(a + 1, len(blocks)):
            for x in blocks[a][1]:
                for y in blocks[b][1]:
                    edges.append((x, y))
    return BoundariedGraph(nxt, frozenset(edges), tuple(range(t)))


def verify_realization(f, method: str = "auto") -> bool:
    g = realize_function(f)
    return normalize(boundary_function(g, method)).values == tuple(f.values)


def realized_size(f) -> int:
    return 2 * f.t + sum(v for v in f.values if v > 0)


__all__ = ["realize_function", "verify_realization", "realized_size", "RepresentativeFunction"]
