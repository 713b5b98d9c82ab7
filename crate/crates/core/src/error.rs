use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HdxError {
    #[error("duplicate face {0:?}")]
    DuplicateFace(Vec<usize>),

    #[error("invalid face {0:?}: vertices must be distinct")]
    InvalidFace(Vec<usize>),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("{what} index {index} out of range (size {size})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        size: usize,
    },

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("capacity exceeded: {what} is {size}, threshold is {threshold}")]
    Capacity {
        what: String,
        size: usize,
        threshold: usize,
    },

    #[error("not regular: {0}")]
    NotRegular(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("degenerate: {0}")]
    Degenerate(String),

    #[error("undefined transition: {0}")]
    UndefinedTransition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl HdxError {
    pub fn capacity(what: impl Into<String>, size: usize, threshold: usize) -> Self {
        HdxError::Capacity {
            what: what.into(),
            size,
            threshold,
        }
    }

    pub fn is_capacity(&self) -> bool {
        matches!(self, HdxError::Capacity { .. })
    }
}

pub type Result<T> = std::result::Result<T, HdxError>;
