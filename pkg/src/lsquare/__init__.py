"""Simplicial support complexes and exact Betti numbers for monomial ideal squares."""

from .complexes import (
    SimplicialComplex,
    delete_vertex,
    empty_or_connected,
    f_vector,
    faces_by_dim,
    find_leaf,
    induced_subcomplex,
    is_connected,
    is_leaf,
    leaf_joint,
    quasi_forest_order,
    reduced_homology_ranks,
)
from .homology import (
    DEFAULT_LIMITS,
    HomologyLimits,
    PrimeField,
    RATIONALS,
    RationalField,
    ResourceLimit,
    parse_field,
)
from .l2 import (
    BoundTable,
    DeletionRecord,
    PairVertex,
    bound_table,
    deletion_face_bound,
    l2_of_ideal,
    l2_skeleton,
    pair_index,
    pairs_of,
    skeleton_face_bound,
    taylor_face_bound,
)
from .labeled import (
    BettiTable,
    LabeledComplex,
    NotQuasiForest,
    SupportReport,
    UnsupportedComplex,
    betti_numbers,
    betti_upper_bounds,
    restrict_divides,
    restrict_strict,
    supports_resolution_homological,
    supports_resolution_quasitree,
    taylor_complex,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    ParseError,
    VariableMismatch,
    VariableTable,
    format_ideal,
    format_monomial,
    lcm_lattice,
    lcm_lattice_by_subsets,
    minimalize,
    parse_generators,
    parse_ideal,
    parse_monomial,
)

__version__ = "0.1.0"
