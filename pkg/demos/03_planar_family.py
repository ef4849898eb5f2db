"""The planar family for boundary size t.

For every non-constant monotone function f, the CNF graph is built and
planarized with crossover gadgets. The script reports its size, checks
planarity, checks that the boundary subsets attaining the optimum are
exactly the ones where f is one, and runs the cleaning schedule.
"""
import sys

from protrusion_lab.metrics import is_planar, simulate_mixed_search
from protrusion_lab.oracle import boundary_function, max_independent_set
from protrusion_lab.planar import (crossover_gadget, crossover_table, generate_cleaning_schedule,
                                   planar_family_members)

t = int(sys.argv[1]) if len(sys.argv) > 1 else 2

gad = crossover_gadget()
table = crossover_table(gad.graph, gad.terminals)
print("crossover gadget: rows j=0..2, columns i=0..2")
for j in range(3):
    print("   ", [table[(i, j)] for i in range(3)])

print(f"\nfamily for t={t}")
for m in planar_family_members(t):
    g = m.graph
    opt = max_independent_set(g)
    sf = boundary_function(g)
    tops = [s for s in range(1 << t) if sf[s] == opt]
    ones = [s for s in range(1 << t) if m.function(s)]
    run = simulate_mixed_search(g, generate_cleaning_schedule(g, m.drawing))
    print(f"  f={m.function.outputs} clauses={m.cnf.clauses} n={g.n:3d} crossings={m.crossings:2d} "
          f"planar={is_planar(g)} opt={opt} (expected {m.expected_optimum}) "
          f"top subsets match f: {tops == ones} cleaners={run.max_cleaners}")
