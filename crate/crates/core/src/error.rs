use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("state budget exceeded: {what} needs {required} states, budget is {budget}")]
    BudgetExceeded {
        what: String,
        required: usize,
        budget: usize,
    },

    #[error("{what} supports at most {max}, got {got}")]
    TooLarge {
        what: &'static str,
        got: usize,
        max: usize,
    },

    #[error("graph is not connected ({context})")]
    Disconnected { context: String },

    #[error("induced prefix on the first {k} vertices is disconnected")]
    DisconnectedPrefix { k: usize },

    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("invalid edge ({u}, {v}): {reason}")]
    InvalidEdge { u: usize, v: usize, reason: String },

    #[error("edge ({u}, {v}) is not pendant: neither endpoint has degree 1")]
    NotPendant { u: usize, v: usize },

    #[error("{what} out of range: {got} (expected {expected})")]
    ArgOutOfRange {
        what: &'static str,
        got: usize,
        expected: String,
    },

    #[error("graph6 error: {0}")]
    Graph6(String),

    #[error("edge list error: {0}")]
    EdgeList(String),

    #[error("invalid lattice coordinates: {0}")]
    BadCoords(String),

    #[error(
        "map is not a lumping: states {x} and {y} share a block but their rates into \
         block {block} differ by {difference:e}"
    )]
    NotLumpable {
        x: usize,
        y: usize,
        block: usize,
        difference: f64,
    },

    #[error("quotient rate matrix is not symmetric: Q'({u},{v}) = {forward} vs Q'({v},{u}) = {backward}")]
    AsymmetricQuotient {
        u: usize,
        v: usize,
        forward: f64,
        backward: f64,
    },

    #[error("operator is {got}, expected {expected}")]
    ProcessMismatch {
        expected: &'static str,
        got: String,
    },

    #[error("eigensolver did not converge after {iterations} iterations (best residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("chain is reducible: second eigenvalue of -Q is {second:e}, below the gap threshold {threshold:e}")]
    ReducibleChain { second: f64, threshold: f64 },

    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,

    #[error("vector length {got} does not match state space size {expected}")]
    DimensionMismatch { got: usize, expected: usize },

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
