"""Symmetry analysis for finite simple connected graphs.

Decides distance-regularity and s-distance-transitivity, extracts the block
designs carried by vertex-stabilizer orbits on spheres, classifies the
adjacency relations between a sphere and an orbit, and verifies the cubic
and tetravalent regularity/girth predictions on a built-in corpus.
"""

__version__ = "0.1.0"

from .autgroup import (
    SearchStats,
    automorphism_generators,
    brute_force_automorphisms,
    equitable_refinement,
)
from .corpus import NamedGraphEntry, corpus, corpus_entry, corpus_graph, corpus_names
from .designs import (
    AdjacencyRelationClass,
    BlockDesign,
    OneDesignClass,
    SphereOrbitProfile,
    UniformOverlapDesign,
    adjacency_relation_class,
    delta_t_formula,
    enumerate_small_one_designs,
    extract_design,
    kappa,
    one_design_catalogue,
    sphere_orbit_profile,
    verify_hypothesis,
)
from .errors import (
    ConnectivityError,
    CycleNotationError,
    DomainInvarianceError,
    Graph6Error,
    GraphDataError,
    HypothesisError,
    PermutationError,
    RegularityError,
    ScaleError,
    TheoremViolationError,
    ToolkitError,
    TransitivityError,
)
from .graph6 import encode_graph6, parse_graph6, parse_graph6_stream
from .graphs import (
    NO_CYCLE,
    DistanceData,
    DistanceRegularityWitness,
    GirthData,
    Graph,
    IntersectionArray,
    LevelTriple,
    LocalIntersectionNumbers,
    bfs_levels,
    degree_two_count,
    diameter,
    distance_regular,
    girth_data,
    induced_degree_profile,
    is_distance_regular,
    local_girth,
    local_intersection_numbers,
    vertex_girth,
)
from .permgroups import (
    GeneratedGroup,
    OrbitPartition,
    compose,
    format_cycles,
    identity,
    induced_action,
    inverse,
    is_t_homogeneous,
    is_transitive,
    max_homogeneity,
    orbits,
    parse_generators,
    parse_permutation,
    point_stabilizer,
    schreier_sims,
)
from .report import analyze, aut_group, report_json, scan_profiles
from .theorems import (
    TheoremVerdict,
    TransitivityReport,
    arc_transitivity_level,
    classify_transitivity,
    count_arcs,
    distance_transitivity_level,
    factorize,
    is_s_arc_transitive,
    split_sphere_order,
    split_sphere_order_table,
    tetravalent_dr_order,
    tetravalent_dr_order_table,
    verify_theorem,
)
