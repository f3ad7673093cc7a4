use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Text that does not encode a valid value.
    #[error("parse error: {0}")]
    Parse(String),

    #[error("entries are not weakly decreasing: {0:?}")]
    NotDominant(Vec<i64>),

    #[error("partition has a negative part: {0:?}")]
    NegativePart(Vec<i64>),

    #[error("invalid Schubert index {elements:?} in {{1..{n}}}: {reason}")]
    InvalidIndex {
        elements: Vec<usize>,
        n: usize,
        reason: &'static str,
    },

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("Grassmannian mismatch: Gr({0}, {1}) vs Gr({2}, {3})")]
    GrassmannianMismatch(usize, usize, usize, usize),

    #[error("partition sizes differ: {0:?}")]
    SizeMismatch(Vec<usize>),

    #[error("{what} = {value} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: i64,
        bound: i64,
    },

    /// A mechanically checked identity failed. Never expected to fire.
    #[error("identity violated: {0}")]
    Violation(String),
}

impl Error {
    pub(crate) fn bound(
        what: &'static str,
        value: impl TryInto<i64>,
        bound: impl TryInto<i64>,
    ) -> Self {
        Error::BoundExceeded {
            what,
            value: value.try_into().unwrap_or(i64::MAX),
            bound: bound.try_into().unwrap_or(i64::MAX),
        }
    }
}
