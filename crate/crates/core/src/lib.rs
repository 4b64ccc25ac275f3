//! Convexity and improper homomorphisms of oriented and 2-edge-coloured graphs.

pub mod bitset;
pub mod convexity;
pub mod graph;
pub mod homomorphism;
pub mod reduction;
pub mod structure;
pub mod verify;

pub use bitset::VertexSet;
pub use convexity::{
    convex_hull, deficient_edge, is_complete_convex, is_convex, two_path_centres, ConvexityError,
    HullEngine, HullTrace,
};
pub use graph::{
    Colour, GraphError, GraphKind, MixedGraph, OrientedGraph, ParsedGraph, ReflexiveTarget,
    SimpleGraph, TwoEdgeColouredGraph, VertexId,
};
pub use homomorphism::{
    admits_improper, classify, enumerate_tournaments, find_homomorphism, oriented_chromatic_number,
    quotient_by_convex, simple_chromatic_number, HomClass, HomMap, SearchMode, Target, Tournament,
};
pub use reduction::{
    build_gadget, colouring_from_assignment, decode_assignment, enumerate_cc, nae_solutions,
    nae_solve, orientation_from_assignment, parse_nae, random_instance, search_cc, Assignment,
    CcScan, CcSearch, LabelledGadgetGraph, NaeInstance, Role, SearchError, Strategy, Variant,
};
pub use structure::{
    add_arc, add_degree2_vertex, add_edge, check_2tree_orientation, delete_arc, delete_edge,
    identify_arcs, identify_edges, recognize_two_tree, recolour_edge, reverse_arc, StructureError,
    TwoTreeOrdering,
};
pub use verify::{verify_suite, Outcome, Property, Report, VerifyConfig, VerifyHooks};
