use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("malformed ring spec: {0}")]
    MalformedSpec(String),

    #[error("unsupported ring: {0}")]
    Unsupported(String),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("element is not a unit: {0}")]
    NotAUnit(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("ring {0} is not enumerable")]
    NonEnumerable(String),

    #[error("element or set belongs to a different ring")]
    RingMismatch,

    #[error("empty subset")]
    EmptySet,

    #[error("hypotheses unmet: {0}")]
    HypothesesUnmet(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl RingError {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        RingError::Parse {
            offset,
            message: message.into(),
        }
    }
}

pub type Result<T, E = RingError> = std::result::Result<T, E>;
