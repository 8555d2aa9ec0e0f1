use thiserror::Error;

/// Errors reported by constructors, transforms and solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a digraph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop arc ({0}, {0}) is not allowed")]
    LoopArc(usize),

    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),

    #[error("arc ({0}, {1}) is not present")]
    MissingArc(usize, usize),

    #[error("digraph of order {n} exceeds the solver guard {guard}")]
    GuardExceeded { n: usize, guard: usize },

    #[error("expected a symmetric digraph (arc ({0}, {1}) has no opposite)")]
    NotSymmetric(usize, usize),

    #[error("expected a connected contrafunctional digraph")]
    NotContrafunctional,

    #[error("expected a directed tree")]
    NotDirectedTree,

    #[error("expected a rooted tree: {0}")]
    NotRootedTree(String),

    #[error("order {n} is below the minimum {min} for this construction")]
    OrderTooSmall { n: usize, min: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
