use thiserror::Error;

use crate::relations::AxiomReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relations have different ground sets ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },

    #[error("label {label} out of range for ground set of size {n}")]
    LabelOutOfRange { label: usize, n: usize },

    #[error("relation contains diagonal pair ({0},{0})")]
    Reflexive(usize),

    #[error("not a Catalan pair: {0}")]
    InvalidPair(Box<AxiomReport>),

    #[error("operation needs a non-empty pair")]
    EmptyInput,

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid value: {0}")]
    Validation(String),

    #[error("outside construction domain: {0}")]
    Domain(String),

    #[error("size {n} exceeds decoder capacity {cap}")]
    Capacity { n: usize, cap: usize },
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
