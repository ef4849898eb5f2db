"""Boundary functions in action.

Builds two small 2-boundaried graphs, prints their boundary functions,
and shows that gluing them with every indicator graph reveals the same
table again. Then it checks whether the two graphs are interchangeable
inside any larger graph.
"""
from protrusion_lab import graph, oracle
from protrusion_lab.equivalence import equivalent

# a path a-b-c with a and c on the boundary, and the same path with one
# extra pendant vertex hanging off b
p3 = graph.BoundariedGraph(3, [(0, 1), (1, 2)], (0, 2))
p3_pendant = graph.BoundariedGraph(4, [(0, 1), (1, 2), (1, 3)], (0, 2))

for name, g in (("path", p3), ("path + pendant", p3_pendant)):
    f = oracle.boundary_function(g)
    print(f"{name:15s} s = {f.values}  normalized = {oracle.normalize(f).values}")

# probing with indicator graphs recovers s(S) from a plain optimum
f = oracle.boundary_function(p3)
for s in range(4):
    glued = graph.glue(p3, graph.indicator_graph(2, s))
    opt = oracle.max_independent_set(glued)
    print(f"S={graph.mask_labels(s)!s:7s} opt(G + I_S) = {opt:2d}  "
          f"s(S) + 2(t-|S|) = {f[s] + 2 * (2 - graph.mask_size(s))}")

r = equivalent(p3, p3_pendant)
print("equivalent:", r.to_dict())
