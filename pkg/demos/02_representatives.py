"""From representative functions to graphs and back.

Enumerates the representative functions for small boundaries, realizes
each as a graph, and confirms that the normalized boundary function of
the graph is the function it was built from.
"""
import sys

from protrusion_lab.equivalence import (dedekind, enumerate_representative_functions,
                                        stirling_bound)
from protrusion_lab.oracle import boundary_function, normalize
from protrusion_lab.synthesis import realize_function

t_max = int(sys.argv[1]) if len(sys.argv) > 1 else 3

for t in range(1, t_max + 1):
    funcs = enumerate_representative_functions(t)
    ok = all(normalize(boundary_function(realize_function(f))).values == f.values for f in funcs)
    biggest = max(realize_function(f).n for f in funcs)
    print(f"t={t}: {len(funcs):4d} classes, realized exactly: {ok}, largest realization {biggest}")

print("\nlower bound from monotone functions (M(t) - 1) against the class count:")
for t in range(0, 5):
    print(f"  t={t}: M(t)-1 = {dedekind(t) - 1:4d}, classes = {len(enumerate_representative_functions(t))}")
print("\nceil(2^t / sqrt(4t)) for t = 1..12:", [stirling_bound(t) for t in range(1, 13)])
