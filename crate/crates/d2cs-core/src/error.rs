use crate::schordal::SeoViolation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("graph is disconnected (component sizes {0:?})")]
    Disconnected(Vec<usize>),
    #[error("graph has {n} vertices, above the oracle limit of {limit}")]
    AboveOracleLimit { n: usize, limit: usize },
    #[error("ordering is not a permutation of 1..={n}")]
    NotAPermutation { n: usize },
    #[error("not a strong elimination ordering: {0}")]
    NotStrongElimination(SeoViolation),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("internal consistency error: {0}")]
    Internal(String),
}
