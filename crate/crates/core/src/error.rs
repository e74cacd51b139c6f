use thiserror::Error;

use crate::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("tree has fewer than two vertices")]
    TreeTooSmall,
    #[error("merge root {0} is not a vertex of the first tree")]
    DisconnectedMerge(VertexId),
    #[error("vertex {0} has no finite-cost in-path")]
    Unreachable(VertexId),
    #[error("terminal {0} is unreachable from the root")]
    UnreachableTerminal(VertexId),
    #[error("budget {0} too small: an iteration covered nothing new")]
    BudgetTooSmall(u64),
    #[error("reachable vertices do not span a base of the matroid")]
    RankUnreachable,
    #[error("samples are not nondecreasing concave: {0}")]
    NotConcave(String),
    #[error("instance too large for exact enumeration: {0}")]
    TooLarge(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid instance: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
