"""gammahom: homomorphism-count dominance between digraphs, verified
exhaustively at desk scale.

The library enumerates and counts (strict) homomorphisms, factors
homomorphisms through their pre-image-component quotients, decides
count-dominance relations over bounded digraph classes, and constructs
dominance pairs by arc rearrangement.  All verdicts are exact and relative
to an explicit finite class truncation.
"""

from .digraph import (
    ClassKind,
    ClassSpec,
    Digraph,
    covering_arcs,
    direct_sum,
    edges_of,
    from_undirected_edges,
    induced,
    is_acyclic,
    is_member,
    loops_removed,
    ordinal_sum,
    reflexive_closure,
    relabel,
    satisfies_kind,
    symmetric_closure_view,
    to_dot,
    transitive_hull,
    underlying,
)
from .connectivity import (
    ComponentMap,
    component_map,
    components,
    gamma,
    gamma_component,
    gamma_monotone_check,
    is_convex,
    map_partition,
)
from .homs import (
    HomMode,
    HomSetHandle,
    VertexMap,
    compose,
    constant_map,
    count_homs,
    enumerate_homs,
    identity_map,
    is_homomorphism,
    strict_count_direct_sum,
    strict_count_ordinal_sum,
    upsets,
)
from .quotient import (
    QuotientDigraph,
    no_odd_walks_between_equal_images,
    quotient_of,
    theta_class,
    transitive_quotient,
    walks_between_equal_images_trivial,
)
from .catalog import (
    CanonicalForm,
    canonical_form,
    canonical_relabel,
    generate,
    is_isomorphic,
)
from .verify import (
    DistinguishReport,
    DominanceReport,
    SchemeAssembly,
    assemble_scheme,
    check_dominance,
    check_gamma_leq,
    check_hom_dominance,
    check_strict_dominance,
    hom_vector,
    lovasz_distinguish,
    quotient_closure,
    sum_compatibility_check,
)
from .rearrange import (
    RearrangementResult,
    RearrangementSpec,
    ValidationReport,
    WalkReport,
    build_s,
    exceptional_set,
    generate_specs,
    pentagon_spec,
    poset_rearrange,
    rho_apply,
    rho_invert,
    three_vertex_spec,
    undirected_rearrange,
    validate_spec,
    walk_k_analysis,
)
from .caches import clear_caches
from . import errors

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
