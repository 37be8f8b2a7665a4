"""Matchings compatible with several labeled point sets.

A matching on labels {1..n} is compatible with an instance of labeled
point sets when its straight-line drawing is crossing-free on every set
simultaneously.  This package provides exact and greedy solvers for the
maximum compatible matching, the constructive algorithms with provable
size guarantees, structured instance generators, exhaustive searches for
the guaranteed size over all labelings, and checkers for families of
labelings that force single-edge matchings.
"""

from .bounds import (
    CcmRecord,
    GuaranteedSizes,
    RECTILINEAR_ALPHA_LOWER,
    ThresholdReport,
    UNIVERSAL_ALPHA_LOWER,
    canonical_labelings,
    ccm_search,
    count_plane_k_matchings_convex,
    force_bounds,
    independent_edge_pairs,
    labelings_realizing_pair,
    lb_formulas,
    prob_threshold,
    two_matching_exists,
    verify_force_family,
)
from .conflict import (
    ConflictGraph,
    all_candidate_edges,
    build_conflict_graph,
    edges_cross_in_set,
    is_compatible,
)
from .constructive import (
    Shape,
    all_shapes,
    block_non_nested_matching,
    circular_monotone_subsequence,
    is_non_nested,
    noncrossing_position_matchings,
    rball_matching,
    same_shape_matching,
    shape_of,
)
from .generators import (
    InfiniteForceError,
    bit_partition_family,
    convex_polygon_points,
    five_block_permutation,
    force_search_random,
    has_crossing_quadruple,
    partition_triple,
    random_labeling,
    random_planar_set,
    relabel_planar,
)
from .geom import (
    CLOCKWISE,
    COLLINEAR,
    COUNTERCLOCKWISE,
    DegeneracyError,
    Point,
    convex_cyclic_order,
    convex_hull,
    is_general_position,
    orientation,
    segments_cross,
)
from .model import (
    ConvexSet,
    Instance,
    InstanceError,
    LabeledSet,
    Matching,
    PlanarSet,
    parse_instance,
    parse_matching,
    planar_to_convex,
    write_instance,
    write_matching,
)
from .solver import (
    SolveResult,
    brute_force_max_matching,
    greedy_maximal_matching,
    max_compatible_matching,
)

__version__ = "0.1.0"
