//! Domination parameters, their optimal-set families and the
//! reconfiguration graphs built on them.
//!
//! ```
//! use domrec_core::{build_variant_graph, AdjacencyModel, DomVariant, Graph};
//!
//! let c4 = Graph::cycle(4);
//! let r = build_variant_graph(&c4, DomVariant::Gamma, AdjacencyModel::Slide).unwrap();
//! assert_eq!(r.node_count(), 6);
//! ```

pub mod constructions;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod reconfig;
pub mod solvers;
pub mod variants;
pub mod verify;

pub use constructions::{
    attach, construct_connelly, construct_connelly_with_pendants, construct_id, construct_locating, construct_upper,
    make_gadget, multiply, Construction, ConstructionKind, Gadget, GadgetKind,
};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use reconfig::{
    adjacent_jump, adjacent_slide, analyze, build_k_dominating_graph, build_variant_graph, frozen_vertices,
    stuck_vertices, AdjacencyModel, Analysis, ReconfigGraph,
};
pub use solvers::{bb_optimal, brute_force_optimal, enumerate_minimal_dominating, parameter, Optimum, ParamValue, SetFamily};
pub use variants::{satisfies, DomVariant};
pub use verify::{are_isomorphic, verify_realizability, Report};
