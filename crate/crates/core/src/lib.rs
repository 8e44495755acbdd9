//! Local antimagic edge labelings: LAU graph construction, the canonical
//! three-color labeling, label-preserving transformations, verification, and
//! exact search for the local antimagic chromatic number on small graphs.

pub mod args;
pub mod document;
pub mod dot;
pub mod graph;
pub mod lau;
pub mod solver;
pub mod transform;

pub use graph::{
    chromatic_number_exact, connected_components, graph_from_edges, verify_local_antimagic,
    vertex_sums, EdgeId, EdgeLabeling, Graph, GraphError, LabeledGraph, VerificationReport,
    VertexId,
};
pub use lau::{
    build_component, build_lau, canonical_labeling, expected_spectrum, k_step_sequence,
    tripartite_certificate, validate_j_sequence, LauParams, LauSpec, PositionedGraph,
};
pub use solver::{chi_la_exact, verify_chi_la_claim, ClaimStatus, SearchConfig, SolveOutcome};
pub use transform::{
    build_gcl, edge_swap, find_swap_sets, merge_across, merge_vertices, merge_within, ClassColors,
    MergeFamily, SwapSpec,
};
