"""Cayley-graph interconnection topologies at desk scale.

Construction of symmetric network families (hypercubes, folded and
augmented cubes, star and transposition graphs, circulants, tori),
exact symmetry and connectivity analysis with certificates, explicit
parallel-path containers, and code-derived optimality conditions.
"""

from .codes import (
    BinaryMatrix,
    cayley_from_matrix,
    column_sum_condition,
    rank_f2,
    repetition_check_matrix,
)
from .connectivity import (
    Atom,
    ConnectivityReport,
    atoms,
    connectivity_report,
    edge_connectivity,
    max_independent_paths,
    vertex_connectivity,
)
from .containers import (
    Container,
    folded_container,
    hypercube_container,
    verify_container,
)
from .errors import GuardExceeded, UnsupportedInput
from .families import build_family
from .graphs import (
    Graph,
    cartesian_product,
    cayley_graph,
    complement,
    from_transpositions,
    line_graph,
)
from .groups import (
    BinaryGroup,
    CyclicProduct,
    GeneratingSet,
    Perm,
    PermSubgroup,
    ResidueTuple,
    SymmetricGroup,
    Word,
    closure,
    compose,
    inverse,
    parse_element,
    validate_generating_set,
)
from .metrics import (
    INFINITE,
    diameter,
    degree_stats,
    distance_layers,
    girth,
    is_bipartite,
    moore_bound,
)
from .symmetry import (
    AutGroup,
    NormalityVerdict,
    TransitivityReport,
    aut_group_fixing_s,
    automorphism_group,
    find_regular_subgroup,
    graph_isomorphic,
    normality_verdict,
    right_regular_action,
    stabilizer_orbits,
    transitivity_report,
)
from .transpositions import TranspositionSet, classify, transposition_graph

__version__ = "0.1.0"
