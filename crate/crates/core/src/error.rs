use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument fell outside the domain an operation is defined on.
    #[error("{op}: argument {value} outside domain ({expected})")]
    Domain {
        op: &'static str,
        value: i64,
        expected: &'static str,
    },

    #[error("matrix has a zero diagonal entry at ({0}, {0})")]
    ZeroDiagonal(usize),

    #[error("series truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("series constant term is not an invertible rational constant")]
    NonInvertibleConstant,

    #[error("series truncated at order {have}, need at least {need}")]
    InsufficientOrder { have: usize, need: usize },

    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

pub(crate) fn domain(op: &'static str, value: i64, expected: &'static str) -> Error {
    Error::Domain {
        op,
        value,
        expected,
    }
}
