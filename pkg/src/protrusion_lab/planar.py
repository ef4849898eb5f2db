"""Clause gadgets, the crossover gadget, the path-and-clause graph of a
monotone CNF, its planarization, and the planar family of nonequivalent
boundaried graphs.

Graph of a CNF with m clauses over t variables (``build_G_phi``): vertex
``p[r][k]`` is the k-th vertex (k = 1..2m) of the horizontal path of row r,
stored at id ``(r-1)*2m + (k-1)``; the first vertex of each row is the
boundary vertex with label r. Clause gadgets follow in clause order. The
terminal of a clause for variable x attaches to ``p[x][2i]``. Within a
clause the variables are sorted in decreasing order, so the leftmost
terminal reaches the lowest row.

Drawing: the clause gadget sits above the paths between columns 2i-1 and
2i; the edge from terminal j down to row l(j) crosses the path edge
``p[r][2i-1] p[r][2i]`` of every row r < l(j).
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Sequence

from .equivalence import (MonotoneBoolFunction, MonotoneCNF, enumerate_monotone_functions,
                          monotone_to_cnf)
from .graph import BoundariedGraph, Graph, GraphError
from .metrics import CleaningSchedule, schedule_from_ordering
from .oracle import constrained_mis


class GadgetError(RuntimeError):
    """The stored gadget does not behave as required."""


class LayoutError(ValueError):
    """A drawing or layout does not match the graph it is applied to."""


# -- clause gadget ------------------------------------------------------------

@dataclass(frozen=True)
class ClauseGadget:
    graph: Graph
    v_start: int
    v_end: int
    terminals: tuple
    chain: tuple  # v_start, u_1, v_1, w_1, ..., u_k, v_k, w_k, v_end

    @property
    def k(self) -> int:
        return len(self.terminals)


def clause_gadget(k: int) -> ClauseGadget:
    """k triangles {u_i, v_i, w_i} chained by w_i u_{i+1}, with pendant ends.

    Ids: v_start = 0, then u_i, v_i, w_i = 3i-2, 3i-1, 3i, and v_end = 3k+1.
    Terminals are the v_i.
    """
    if k < 1:
        raise ValueError("clause size must be positive")
    edges = [(0, 1), (3 * k, 3 * k + 1)]
    for i in range(1, k + 1):
        u, v, w = 3 * i - 2, 3 * i - 1, 3 * i
        edges += [(u, v), (v, w), (u, w)]
        if i < k:
            edges.append((w, w + 1))
    terms = tuple(3 * i - 1 for i in range(1, k + 1))
    return ClauseGadget(Graph(3 * k + 2, edges), 0, 3 * k + 1, terms, tuple(range(3 * k + 2)))


# -- crossover gadget ---------------------------------------------------------

# Terminals: v = 0, v' = 1, u = 2, u' = 3. The gadget is symmetric under the
# reflections swapping v <-> v' and u <-> u'. A straight-line planar drawing
# is given by GADGET_POSITIONS (v on top, v' at the bottom, u left, u' right).
GADGET_EDGES = (
    (0, 4), (0, 5), (1, 6), (1, 7), (2, 5), (2, 7), (2, 17), (3, 4), (3, 6), (3, 16),
    (4, 8), (4, 12), (4, 18), (5, 9), (5, 13), (5, 19), (6, 10), (6, 14), (6, 18),
    (7, 11), (7, 15), (7, 19), (8, 10), (8, 12), (8, 18), (8, 20), (9, 11), (9, 13),
    (9, 19), (9, 20), (10, 14), (10, 18), (10, 21), (11, 15), (11, 19), (11, 21),
    (12, 13), (14, 15), (16, 18), (17, 19), (20, 21),
)
GADGET_POSITIONS = (
    (0.0, 5.0), (0.0, -5.0), (-5.0, 0.0), (5.0, 0.0),
    (2.227, 1.755), (-2.227, 1.755), (2.227, -1.755), (-2.227, -1.755),
    (2.112, 0.409), (-2.112, 0.409), (2.112, -0.409), (-2.112, -0.409),
    (0.461, 2.903), (-0.461, 2.903), (0.461, -2.903), (-0.461, -2.903),
    (4.429, 0.0), (-4.429, 0.0), (2.791, 0.0), (-2.791, 0.0), (0.0, 1.953), (0.0, -1.953),
)
GADGET_V, GADGET_V2, GADGET_U, GADGET_U2 = 0, 1, 2, 3
# Visiting order that cleans the gadget entering at v and u and leaving at
# v' and u', with at most five vertices (entry vertices included) waiting on
# unvisited neighbours at any time.
GADGET_SWEEP_ORDER = (19, 17, 13, 2, 9, 0, 5, 7, 11, 20, 12, 4, 8, 21, 10, 18, 15, 14, 6, 16, 3, 1)

# Largest independent set using exactly i of {v, v'} and j of {u, u'}:
# CROSSOVER_TABLE[j][i].
CROSSOVER_TABLE = ((7, 8, 8), (8, 9, 9), (7, 8, 9))
CROSSOVER_GAIN = 9


@dataclass(frozen=True)
class CrossoverGadget:
    graph: Graph
    terminals: tuple  # (u, u', v, v')

    @property
    def u(self):
        return self.terminals[0]

    @property
    def u2(self):
        return self.terminals[1]

    @property
    def v(self):
        return self.terminals[2]

    @property
    def v2(self):
        return self.terminals[3]


def crossover_table(g: Graph, terminals: Sequence[int], method: str = "auto") -> dict:
    """Constrained optima keyed by (i, j): exactly i of {v, v'} and j of {u, u'}.

    ``terminals`` is (u, u', v, v'). Combinations that are not independent
    are skipped.
    """
    u, u2, v, v2 = terminals
    table: dict = {}
    for chosen in itertools.product((0, 1), repeat=4):
        inc = [x for x, c in zip((u, u2, v, v2), chosen) if c]
        exc = [x for x, c in zip((u, u2, v, v2), chosen) if not c]
        val = constrained_mis(g, inc, exc, method)
        if val < 0:
            continue
        key = (chosen[2] + chosen[3], chosen[0] + chosen[1])
        table[key] = max(table.get(key, -1), val)
    return table


def expected_crossover_table() -> dict:
    return {(i, j): CROSSOVER_TABLE[j][i] for i in range(3) for j in range(3)}


@lru_cache(maxsize=1)
def crossover_gadget() -> CrossoverGadget:
    """The 22-vertex crossover gadget, validated against its optimum table."""
    g = Graph(22, GADGET_EDGES)
    gadget = CrossoverGadget(g, (GADGET_U, GADGET_U2, GADGET_V, GADGET_V2))
    if crossover_table(g, gadget.terminals) != expected_crossover_table():
        raise GadgetError("crossover gadget data does not reproduce its optimum table")
    return gadget


def planarize_crossing(g: Graph, terminal_edge: Sequence[int], path_edge: Sequence[int]) -> Graph:
    """Replace the crossing of edges ab and cd by a fresh crossover gadget.

    The gadget occupies ids g.n .. g.n+21 (gadget vertex x becomes g.n + x);
    the new edges are a-v, v'-b, c-u and u'-d. Boundary labels are kept.
    """
    a, b = terminal_edge
    c, d = path_edge
    if len({a, b, c, d}) != 4:
        raise LayoutError("crossing edges must have four distinct endpoints")
    for e in ((a, b), (c, d)):
        if not g.has_edge(*e):
            raise LayoutError(f"edge {tuple(e)} is not present")
    gad = crossover_gadget()
    off = g.n
    edges = set(g.edges)
    edges.discard((min(a, b), max(a, b)))
    edges.discard((min(c, d), max(c, d)))
    edges.update((x + off, y + off) for x, y in gad.graph.edges)
    edges.update([(a, off + gad.v), (off + gad.v2, b), (c, off + gad.u), (off + gad.u2, d)])
    if isinstance(g, BoundariedGraph):
        return BoundariedGraph(g.n + 22, edges, g.boundary)
    return Graph(g.n + 22, edges)


# -- graph of a monotone CNF --------------------------------------------------

@dataclass(frozen=True)
class Crossing:
    clause: int    # 1-based clause index
    terminal: int  # 1-based position of the terminal inside its clause
    row: int       # path crossed
    terminal_edge: tuple  # (clause-side endpoint, path endpoint)
    path_edge: tuple      # (left endpoint, right endpoint)

    def to_dict(self) -> dict:
        return {"clause": self.clause, "terminal": self.terminal, "row": self.row,
                "terminal_edge": list(self.terminal_edge), "path_edge": list(self.path_edge)}


@dataclass(frozen=True)
class ClausePlacement:
    chain: tuple      # v_start, u_1, v_1, w_1, ..., v_end
    targets: tuple    # row of each terminal, strictly decreasing

    @property
    def terminals(self) -> tuple:
        return tuple(self.chain[3 * j + 2] for j in range(len(self.targets)))


@dataclass(frozen=True)
class Drawing:
    t: int
    paths: tuple                 # paths[r-1] = ids of row r, left to right
    clauses: tuple               # ClausePlacement per clause
    crossings: tuple             # Crossing records in planarization order
    gadget_offsets: tuple = ()   # filled in once the crossings are planarized

    @property
    def m(self) -> int:
        return len(self.clauses)

    @property
    def planarized(self) -> bool:
        return len(self.gadget_offsets) == len(self.crossings) and bool(self.crossings)

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "paths": [list(p) for p in self.paths],
            "clauses": [{"chain": list(c.chain), "targets": list(c.targets)} for c in self.clauses],
            "crossings": [c.to_dict() for c in self.crossings],
            "gadget_offsets": list(self.gadget_offsets),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "Drawing":
        try:
            return cls(
                int(d["t"]),
                tuple(tuple(int(x) for x in p) for p in d["paths"]),
                tuple(ClausePlacement(tuple(c["chain"]), tuple(c["targets"])) for c in d["clauses"]),
                tuple(Crossing(int(c["clause"]), int(c["terminal"]), int(c["row"]),
                               tuple(c["terminal_edge"]), tuple(c["path_edge"]))
                      for c in d["crossings"]),
                tuple(int(x) for x in d.get("gadget_offsets", ())),
            )
        except (KeyError, TypeError) as exc:
            raise LayoutError(f"malformed drawing: {exc}") from exc


def build_G_phi(t: int, cnf: MonotoneCNF) -> tuple[BoundariedGraph, Drawing]:
    """Path-and-clause graph of a monotone CNF plus its prescribed drawing."""
    if cnf.t != t:
        raise ValueError(f"CNF is over {cnf.t} variables, expected {t}")
    m = len(cnf.clauses)
    if m == 0:
        raise ValueError("CNF needs at least one clause")
    width = 2 * m
    paths = tuple(tuple((r - 1) * width + k for k in range(width)) for r in range(1, t + 1))
    edges = [(p[k], p[k + 1]) for p in paths for k in range(width - 1)]
    nxt = t * width
    clauses = []
    crossings = []
    for i, clause in enumerate(cnf.clauses, start=1):
        gad = clause_gadget(len(clause))
        chain = tuple(x + nxt for x in gad.chain)
        edges += [(a + nxt, b + nxt) for a, b in gad.graph.edges]
        nxt += gad.graph.n
        targets = tuple(sorted(clause, reverse=True))
        place = ClausePlacement(chain, targets)
        clauses.append(place)
        for j, (term, row) in enumerate(zip(place.terminals, targets), start=1):
            tgt = paths[row - 1][2 * i - 1]
            edges.append((term, tgt))
            for r in range(1, row):
                left, right = paths[r - 1][2 * i - 2], paths[r - 1][2 * i - 1]
                crossings.append(Crossing(i, j, r, (term, tgt), (left, right)))
    g = BoundariedGraph(nxt, edges, tuple(p[0] for p in paths))
    return g, Drawing(t, paths, tuple(clauses), tuple(crossings))


def check_drawing(g: Graph, d: Drawing) -> None:
    """Raise LayoutError unless every crossing names two edges of ``g`` that the
    layout rule makes cross, each pair at most once."""
    seen = set()
    for c in d.crossings:
        if not (1 <= c.clause <= d.m and 1 <= c.row <= d.t):
            raise LayoutError(f"crossing {c} is out of range")
        place = d.clauses[c.clause - 1]
        if not 1 <= c.terminal <= len(place.targets):
            raise LayoutError(f"crossing {c} names a missing terminal")
        row = place.targets[c.terminal - 1]
        term = place.terminals[c.terminal - 1]
        col = 2 * c.clause
        if tuple(c.terminal_edge) != (term, d.paths[row - 1][col - 1]):
            raise LayoutError(f"crossing {c} has the wrong terminal edge")
        if tuple(c.path_edge) != (d.paths[c.row - 1][col - 2], d.paths[c.row - 1][col - 1]):
            raise LayoutError(f"crossing {c} has the wrong path edge")
        if c.row >= row:
            raise LayoutError(f"terminal edge of {c} does not reach past row {c.row}")
        for e in (c.terminal_edge, c.path_edge):
            if not g.has_edge(*e):
                raise LayoutError(f"edge {e} of crossing {c} is not in the graph")
        key = (tuple(c.terminal_edge), tuple(c.path_edge))
        if key in seen:
            raise LayoutError(f"crossing {c} listed twice")
        seen.add(key)


def planarize_with_layout(g: BoundariedGraph, d: Drawing) -> tuple[BoundariedGraph, Drawing]:
    """Planarize every crossing of the drawing, in the listed order.

    Each original edge is cut into a chain of gadgets; a crossing is applied
    to the pieces that currently lie at that crossing. Returns the planar
    graph and the drawing annotated with the id offset of every gadget.
    """
    if d.gadget_offsets:
        raise LayoutError("drawing has already been planarized")
    check_drawing(g, d)
    strand_tail = {}
    row_tail = {}
    offsets = []
    for c in d.crossings:
        te = strand_tail.get((c.clause, c.terminal), tuple(c.terminal_edge))
        pe = row_tail.get((c.clause, c.row), tuple(c.path_edge))
        off = g.n
        g = planarize_crossing(g, te, pe)
        offsets.append(off)
        strand_tail[(c.clause, c.terminal)] = (off + GADGET_V2, te[1])
        row_tail[(c.clause, c.row)] = (off + GADGET_U2, pe[1])
    return g, replace(d, gadget_offsets=tuple(offsets))


def planarize_G_phi(g: BoundariedGraph, d: Drawing) -> BoundariedGraph:
    return planarize_with_layout(g, d)[0]


def expected_optimum(cnf: MonotoneCNF, crossings: int = 0) -> int:
    """m t + sum (|C_i| + 2) + 9 N."""
    return (len(cnf.clauses) * cnf.t + sum(len(c) + 2 for c in cnf.clauses)
            + CROSSOVER_GAIN * crossings)


# -- cleaning -----------------------------------------------------------------

def sweep_order(g: Graph, d: Drawing) -> list[int]:
    """Left-to-right vertex ordering following the clause rounds.

    Round i starts with one visited vertex p[r][2i-1] per row. The clause
    chain is walked triangle by triangle; after triangle j the edge from its
    terminal is followed downwards through its gadgets (each swept in
    GADGET_SWEEP_ORDER) to the target path vertex. Then the remaining
    vertices p[r][2i] and the next column are visited.
    """
    order = [p[0] for p in d.paths]
    planar = bool(d.gadget_offsets)
    by_strand: dict = {}
    for idx, c in enumerate(d.crossings):
        by_strand.setdefault((c.clause, c.terminal), []).append(idx)
    for i, place in enumerate(d.clauses, start=1):
        chain = place.chain
        order.append(chain[0])
        for j, row in enumerate(place.targets, start=1):
            order.extend(chain[3 * j - 2: 3 * j + 1])
            if planar:
                for idx in sorted(by_strand.get((i, j), ()), key=lambda k: d.crossings[k].row):
                    off = d.gadget_offsets[idx]
                    order.extend(off + x for x in GADGET_SWEEP_ORDER)
            order.append(d.paths[row - 1][2 * i - 1])
        order.append(chain[-1])
        rows_done = set(place.targets)
        for r in range(1, d.t + 1):
            if r not in rows_done:
                order.append(d.paths[r - 1][2 * i - 1])
        if i < d.m:
            order.extend(p[2 * i] for p in d.paths)
    if sorted(order) != list(range(g.n)):
        raise LayoutError("layout does not cover the graph's vertices exactly once")
    return order


def generate_cleaning_schedule(g: Graph, d: Drawing) -> CleaningSchedule:
    """Mixed-search schedule for a (planarized) CNF graph from its layout."""
    for p in d.paths:
        # edges between columns are never crossed
        for a, b in zip(p[1::2], p[2::2]):
            if not g.has_edge(a, b):
                raise LayoutError(f"path edge {(a, b)} missing from the graph")
    return schedule_from_ordering(g, sweep_order(g, d))


# -- planar family ------------------------------------------------------------

@dataclass(frozen=True)
class FamilyMember:
    function: MonotoneBoolFunction
    cnf: MonotoneCNF
    graph: BoundariedGraph
    drawing: Drawing = field(repr=False)

    @property
    def crossings(self) -> int:
        return len(self.drawing.crossings)

    @property
    def expected_optimum(self) -> int:
        return expected_optimum(self.cnf, self.crossings)


def family_member(f: MonotoneBoolFunction) -> FamilyMember:
    cnf = monotone_to_cnf(f)
    g, d = build_G_phi(f.t, cnf)
    if d.crossings:
        g, d = planarize_with_layout(g, d)
    return FamilyMember(f, cnf, g, d)


def planar_family_members(t: int) -> list[FamilyMember]:
    """One planar graph per non-constant monotone function of t variables."""
    return [family_member(f) for f in enumerate_monotone_functions(t) if not f.is_constant]


def build_planar_family(t: int) -> list[BoundariedGraph]:
    return [m.graph for m in planar_family_members(t)]
