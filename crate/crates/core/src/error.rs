//! Crate-wide error type.

use thiserror::Error;

use crate::feasibility::FeasibilityVerdict;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("edge index {index} out of range for a graph with {m} edges")]
    EdgeIndexOutOfRange { index: usize, m: usize },

    #[error("score vector has {got} entries but the graph has {expected} vertices")]
    DimensionMismatch { got: usize, expected: usize },

    #[error("edge ({i}, {j}) has probability {p} outside [0, 1]")]
    ProbabilityOutOfRange { i: usize, j: usize, p: String },

    #[error("winners list has {got} entries but the graph has {expected} edges")]
    WinnerCountMismatch { got: usize, expected: usize },

    #[error("winner {winner} is not an endpoint of edge ({i}, {j})")]
    WinnerNotEndpoint { winner: usize, i: usize, j: usize },

    #[error("edge ({i}, {j}) has fractional probability {p}; not a deterministic tournament")]
    NotDeterministic { i: usize, j: usize, p: String },

    #[error(
        "exhaustive subset check on {n} vertices exceeds the limit of {limit}; use check_flow"
    )]
    SubsetCheckTooLarge { n: usize, limit: usize },

    #[error("enumeration over {m} edges exceeds the limit of {limit}")]
    EnumerationTooLarge { m: usize, limit: usize },

    #[error("lattice enumeration needs {required} candidates, over the budget of {budget}")]
    LatticeBudgetExceeded { required: u128, budget: u128 },

    #[error("infeasible score vector: {0}")]
    Infeasible(FeasibilityVerdict),

    #[error("score vector entry {index} is not an integer: {value}")]
    NonIntegralScore { index: usize, value: String },

    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),

    #[error("invalid JSON input: {0}")]
    Json(String),

    #[error("internal error: {0}")]
    Internal(String),
}
