"""Transfer of the planar Independent Set family to Dominating Set through the
triangle transform."""
from __future__ import annotations

from dataclasses import dataclass

from .graph import BoundariedGraph, Graph, glue, indicator_graph, triangle_transform
from .oracle import min_dominating_set, min_vertex_cover
from .planar import FamilyMember, planar_family_members


class PreconditionError(ValueError):
    pass


def verify_vc_equals_ds(g: Graph, method: str = "auto") -> bool:
    """Minimum vertex cover of ``g`` equals minimum dominating set of its
    triangle transform (graphs without isolated vertices)."""
    if g.isolated_vertices():
        raise PreconditionError("graph has isolated vertices")
    return min_vertex_cover(g, method) == min_dominating_set(triangle_transform(g), method)


def build_ds_family(t: int) -> list[BoundariedGraph]:
    """Triangle transforms of the planar Independent Set family."""
    out = []
    for m in planar_family_members(t):
        if not m.graph.boundary_is_independent():
            raise PreconditionError("family boundary is not independent")
        out.append(triangle_transform(m.graph))
    return out


@dataclass(frozen=True)
class Separation:
    first: int        # family indices
    second: int
    s1: int           # indicator subset masks
    s2: int
    diff1: int        # opt_DS(G1 + T(I1)) - opt_DS(G2 + T(I1))
    diff2: int

    @property
    def separated(self) -> bool:
        return self.diff1 != self.diff2


def indicator_witnesses(a: FamilyMember, b: FamilyMember) -> tuple[int, int]:
    """The indicator pair separating two family members: a subset where the
    functions differ, and the full boundary."""
    t = a.function.t
    diff = [s for s in range(1 << t) if a.function(s) != b.function(s)]
    if not diff:
        raise ValueError("members realize the same function")
    return diff[0], (1 << t) - 1


def ds_glue_optimum(g_ds: BoundariedGraph, s: int, method: str = "auto") -> int:
    """opt_DS of a transformed family member glued with a transformed indicator."""
    glued = glue(g_ds, triangle_transform(indicator_graph(g_ds.t, s)))
    if glued.isolated_vertices():
        raise PreconditionError("glued instance has isolated vertices")
    return min_dominating_set(glued, method)


def ds_separation(members: list[FamilyMember], i: int, j: int, method: str = "auto") -> Separation:
    s1, s2 = indicator_witnesses(members[i], members[j])
    gi = triangle_transform(members[i].graph)
    gj = triangle_transform(members[j].graph)
    d1 = ds_glue_optimum(gi, s1, method) - ds_glue_optimum(gj, s1, method)
    d2 = ds_glue_optimum(gi, s2, method) - ds_glue_optimum(gj, s2, method)
    return Separation(i, j, s1, s2, d1, d2)
