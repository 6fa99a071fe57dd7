use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex id {id} out of range for n = {n} (line {line})")]
    BadVertexId { line: usize, id: usize, n: usize },
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("n = {n} exceeds the limit of {limit} for {what}")]
    LimitExceeded { what: &'static str, n: usize, limit: usize },
    #[error("n = {n} is too large for the coloring-graph oracle (limit {limit})")]
    OracleTooLarge { n: usize, limit: usize },
    #[error("vertex {0} is not a leaf")]
    NotALeaf(usize),
    #[error("expected {expected} values, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("coloring is not proper on edge {0}-{1}")]
    ImproperColoring(usize, usize),
    #[error("not a labeling: edge {0}-{1} has label gap greater than one")]
    InvalidLabeling(usize, usize),
    #[error("labeling incompatible with tree: {0}")]
    IncompatibleLabeling(String),
    #[error("construction hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("no Lipschitz-feasible choice of {k} far vertices")]
    NoValidAssignment { k: usize },
    #[error("methods disagree on {what}: {left} vs {right}")]
    MethodDisagreement { what: String, left: usize, right: usize },
}
