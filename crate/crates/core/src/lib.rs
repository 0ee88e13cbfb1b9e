//! Graph products and their g-extra connectivity.
//!
//! This crate provides:
//!
//! - [`graph`]: simple undirected graphs with provenance-tracking vertex
//!   labels, plus flow-based vertex and edge connectivity;
//! - [`products`]: six graph products (edge corona, neighbourhood corona,
//!   the two subdivision neighbourhood coronas, generalized corona, rooted
//!   product) that record where every product vertex came from;
//! - [`extra`]: an exact, budgeted oracle for g-extra vertex and edge
//!   connectivity with cut certificates;
//! - [`formulas`]: closed-form predictions for the g-extra connectivity of
//!   each product, evaluated per instance.

pub mod extra;
pub mod formulas;
pub mod graph;
pub mod products;

pub use extra::{
    adjacent_pairs_in, g_extra_edge_connectivity, g_extra_vertex_connectivity, k_max_of_min_cuts,
    lambda_k, min_constrained_vertex_cut, minimum_vertex_cuts, ConstrainedCutResult,
    EdgeCutCertificate, ExtraError, SearchBudget, VertexCutCertificate,
};
pub use formulas::{
    predict_edge_corona, predict_generalized_corona, predict_neighbourhood_corona,
    predict_rooted_product, predict_subdivision_edge_nc, predict_subdivision_vertex_nc,
    EvalOptions, Prediction, PredictionKind, Quantity, RangeReading,
};
pub use graph::{Component, CopyOwner, ExtendedCount, Graph, GraphError, VertexLabel};
pub use products::{
    edge_corona, generalized_corona, neighbourhood_corona, rooted_product, subdivision_edge_nc,
    subdivision_vertex_nc, GeneralizedCoronaSpec, ProductError, RootedGraph,
};
