"""How large must representatives be?

Compares the number of small boundaried planar graphs with the number of
classes that need a representative, under three counting models.
"""
from protrusion_lab.counting import (count_boundaried_planar, critical_size_bound,
                                     cumulative_exact_counts)
from protrusion_lab.equivalence import KNOWN_DEDEKIND

print("exact small counts of boundaried planar graphs (t, n) -> count")
for t in range(0, 3):
    print(f"  t={t}:", [count_boundaried_planar(t, n) for n in range(max(t, 1), 6)])

print("\ncritical sizes for t=1..6")
for model in ("exact", "planar", "general"):
    print(f"  {model:8s}", [critical_size_bound(t, model) for t in range(1, 7)])
print("  ordered ", [critical_size_bound(t, "exact", ordered=True) for t in range(1, 7)])

need = KNOWN_DEDEKIND[6] - 2
print(f"\nt=6 needs {need} classes; cumulative graph counts up to n:")
for n, c in zip(range(6, 11), cumulative_exact_counts(6, 10)):
    print(f"  n<={n:2d}: {c:9d} {'enough' if c >= need else ''}")
