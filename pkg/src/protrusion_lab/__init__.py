"""Equivalence classes of t-boundaried graphs for Independent Set and
Dominating Set: exact solvers, boundary functions, representative functions,
realizing graphs, planar gadget families and counting bounds."""
from .graph import (BoundariedGraph, Graph, GraphError, glue, indicator_graph,
                    triangle_transform)
from .oracle import (BoundaryFunction, CapacityError, boundary_function, max_independent_set,
                     min_dominating_set, min_vertex_cover, normalize)
from .equivalence import (MonotoneBoolFunction, MonotoneCNF, RepresentativeFunction, dedekind,
                          enumerate_monotone_functions, enumerate_representative_functions,
                          equivalent, is_representative)
from .synthesis import realize_function, verify_realization
from .metrics import (CleaningSchedule, is_planar, pathwidth_exact, simulate_mixed_search)
from .planar import (build_G_phi, build_planar_family, clause_gadget, crossover_gadget,
                     generate_cleaning_schedule, planarize_G_phi)
from .ds import build_ds_family, verify_vc_equals_ds
from .counting import count_boundaried_planar, critical_size_bound

__version__ = "0.1.0"
