//! Exact computation of the l1-Fiedler value `b(G)` and related cut and
//! spectral invariants of small graphs.

pub mod bounds;
pub mod cuts;
pub mod exec;
pub mod gamma;
pub mod graph;
pub mod rational;
pub mod spectral;
pub mod tree;

pub use cuts::{b_exact, iso_exact, Cut, CutError, InvariantResult};
pub use exec::Exec;
pub use graph::{Graph, GraphError, VertexSet};
pub use rational::Rational;
