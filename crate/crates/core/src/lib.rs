//! Exact computation and verification toolkit for k-limited packings.
//!
//! A set `B` of vertices is a *k-limited packing* when every closed
//! neighbourhood `N[v]` contains at most `k` members of `B`; `L_k(G)` is the
//! largest size of such a set. The crate provides
//!
//! - [`graph`], [`graph6`], [`profile`], [`families`]: bitset graphs on at most
//!   64 vertices, their interchange formats and structural invariants;
//! - [`solvers`]: exact `L_k`, open packing, domination and total domination;
//! - [`bounds`]: closed formulas and inequalities as applicability-guarded
//!   report entries, plus Nordhaus–Gaddum analysis;
//! - [`extremal`]: recognizers and constructors for the extremal families;
//! - [`harness`]: graph corpora and the theorem campaign runner.

pub mod bounds;
pub mod extremal;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod profile;
pub mod solvers;
pub mod vertex_set;

pub use graph::{Graph, GraphError};
pub use profile::{GraphProfile, Length};
pub use solvers::{Method, SolveError, SolveResult};
pub use vertex_set::VertexSet;
