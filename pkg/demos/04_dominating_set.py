"""Carrying the family over to Dominating Set.

The triangle transform turns vertex cover into dominating set. Applied to
the t=2 family, every pair of graphs still reacts differently to a pair of
transformed indicator graphs.
"""
from protrusion_lab.ds import build_ds_family, ds_separation
from protrusion_lab.graph import path_graph, triangle_transform
from protrusion_lab.metrics import is_planar
from protrusion_lab.oracle import min_dominating_set, min_vertex_cover
from protrusion_lab.planar import planar_family_members

p = path_graph(4)
print("P4: vertex cover", min_vertex_cover(p), "| dominating set of transform",
      min_dominating_set(triangle_transform(p)))

fam = build_ds_family(2)
print("transformed family sizes:", [g.n for g in fam], "planar:", all(map(is_planar, fam)))
members = planar_family_members(2)
for i in range(len(members)):
    for j in range(i + 1, len(members)):
        s = ds_separation(members, i, j)
        print(f"  pair ({i},{j}): S1={s.s1} diff={s.diff1:3d} | S2={s.s2} diff={s.diff2:3d}"
              f" -> separated {s.separated}")
