//! Recursive-greedy approximation for submodular-reward arborescence problems.

pub type VertexId = usize;

pub mod arborescence;
pub mod closure;
pub mod constrained;
pub mod engine;
pub mod fast;
pub mod frontier;
pub mod generate;
pub mod greedy;
pub mod error;
pub mod exact;
pub mod graph;
pub mod harness;
pub mod instance;
pub mod min_arb;
pub mod oracle;
pub mod reductions;
pub mod separator;
pub mod set;
pub mod validate;

pub use error::{Error, Result};
pub use set::VertexSet;
