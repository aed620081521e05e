"""Constructive R-infinity certificates for right-angled Artin groups.

A finite simple graph defines a right-angled Artin group whose generators are
the vertices and whose relations make two generators commute exactly when they
are joined by an edge.  This package decides, by constructive certificate,
whether that group has the R-infinity property (every automorphism has
infinitely many twisted conjugacy classes): complete graphs are the definite
negative case, and a tree of graph-theoretic and exact linear-algebraic rules
handles the rest, with UNDECIDED as an honest fallback verdict.
"""

from .certify import (
    NOT_RINF_ABELIAN,
    RINF,
    UNDECIDED,
    Certificate,
    JoinDecomposition,
    SimplificationResult,
    audit_certificate,
    certify,
    max_join_decomposition,
    simplify,
)
from .closures import (
    MbaCharacteristicSets,
    characteristic_closure,
    domination_closure,
    is_characteristic_vertex_set,
    is_transvection_free_graph,
    mba_characteristic_sets,
    transvection_admitting_vertices,
    transvection_free_vertices,
)
from .errors import InputError, ResourceError
from .graphs import (
    Graph,
    MbaParameters,
    Neighborhood,
    SrgParameters,
    StructureFlags,
    VertexSet,
    complement,
    complete_graph,
    complete_multipartite_graph,
    compose,
    cycle_graph,
    dominates,
    edgeless_graph,
    from_edge_list,
    from_edges,
    from_graph6,
    induced,
    mba_parameters,
    neighborhoods,
    path_graph,
    petersen_graph,
    srg_parameters,
    structure_flags,
    to_edge_list,
    to_graph6,
)
from .isomorphism import (
    are_isomorphic,
    automorphisms,
    canonical_form,
    canonical_relabelled,
    enumerate_graphs,
)
from .liering import (
    IntMatrix,
    SignedAut,
    WitnessReport,
    det_exact,
    eigenvalue_witness_report,
    has_eigenvalue_one,
    induced_matrix,
    l2_basis,
    l3_sub_basis,
    signed_automorphisms,
    signed_cycle_matrix,
)
from .lyndon import (
    BracketTree,
    TraceClass,
    bracketing,
    closed_form_lyndon,
    dependence_set,
    enumerate_lyndon,
    initial_vertices,
    is_lyndon,
    standard_factorization,
    support,
    trace_class,
    trace_less,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
