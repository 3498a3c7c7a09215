//! Degree complete labeled graphs.
//!
//! A labeled graph is degree complete when every vector satisfying the
//! dominance bounds between its leftmost and rightmost out-degree vectors is
//! the out-degree vector of some orientation. This crate provides
//!
//! * the orientation side: vector enumeration, realization and a brute-force
//!   oracle ([`realization`]);
//! * the forbidden configuration test for labeled graphs ([`forbidden`]);
//! * recognition of graphs that admit a degree complete labeling
//!   ([`recognition`]) and construction of one ([`labeling`]);
//! * text formats ([`io`]) and seeded generators ([`generators`]).

pub mod error;
pub mod forbidden;
pub mod generators;
pub mod graph;
pub mod io;
pub mod labeling;
pub mod realization;
pub mod recognition;

pub use error::{Error, Result};
pub use forbidden::{
    find_forbidden_configuration, is_degree_complete, scan_forbidden_configuration,
    ConfigurationKind, LabeledWitness,
};
pub use generators::{generate, Family, GeneratorSpec};
pub use graph::{Edge, Graph, LabeledGraph, Labeling, Vertex, VertexMap};
pub use labeling::{label_caterpillar, label_graph, LabelOutcome};
pub use realization::{
    is_degree_complete_oracle, realize, DegreeVector, OracleLimits, OracleVerdict, Orientation,
};
pub use recognition::{
    has_degree_complete_labeling, recognize, Decomposition, ObstructionKind, Recognition, Route,
    UnlabeledWitness,
};
