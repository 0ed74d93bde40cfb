"""Degree of genus-labelled dual graphs of sphere systems, exact simplicial
homology, and the star-replacement descent for disk maps into degree
filtrations."""

from .canonical import canonical_form, canonical_graph
from .enumeration import EnumerationRequest, enumerate_types, verify_suite
from .filtration import (
    DegreeFilteredComplex,
    derived_pillar,
    from_graph,
    low_link,
    validate_filtration,
)
from .graph import (
    Edge,
    GenusGraph,
    GraphStats,
    Vertex,
    collapse_edge,
    degree,
    graph_stats,
    pillar_edges,
    pillar_graph,
    validate_graph,
)
from .manifolds import is_combinatorial_ball, is_combinatorial_sphere
from .reports import VerificationReport
from .simplicial import (
    HomologyProfile,
    SimplicialComplex,
    build_complex,
    cone,
    is_homologically_k_connected,
    join,
    link,
    reduced_homology,
    star,
    verify_join_connectivity,
)
from .surgery import (
    DiskMap,
    bad_simplices,
    fill_sphere_map,
    surgery_descent,
    surgery_step,
)

__version__ = "0.1.0"
