"""Exact computation and verification for graph orientation inversions.

Distances and diameters of orientation reconfiguration come in two
independently implemented flavors: brute-force BFS over flip words and a
complete backtracking solver for vector assignments over F2^t.  On top
sit leveled clique-expansion families with lemma probes, and exhaustive
re-verification of local reducibility configurations.
"""

from .assignment import (
    Assignment,
    diameter_via_assignment,
    enumerate_assignments,
    hardest_label,
    min_dim,
    solve,
    verify,
)
from .errors import BudgetExceededError, InputFormatError, InvariantError
from .family import (
    LeveledGraph,
    build_family,
    family_min_dim_scan,
    is_k_tree,
    probe_bad_cliques,
    probe_clique_independence,
    probe_extension_dichotomy,
)
from .gf2 import Gf2Matrix, Gf2Vector, dot, is_independent, parity, rank, solve_linear
from .graph import (
    Graph,
    Label,
    Orientation,
    boundary,
    is_independent_set,
    max_degree,
    parse_labeled_graph,
    serialize_labeled_graph,
)
from .inversion import bfs_diameter, bfs_distance, diff_label, invert
from .reducibility import (
    BoundaryFamily,
    ReducibilityConfiguration,
    builtin_configs,
    check_family,
    check_reducible,
    enumerate_families,
    run_suite,
)

__version__ = "0.1.0"
