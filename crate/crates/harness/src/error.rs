use ringlab_core::RingError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),

    #[error("{spec} has {size} elements, above the limit of {limit} for the `{filter}` filter")]
    TooLarge {
        spec: String,
        size: u64,
        limit: u32,
        filter: &'static str,
    },

    #[error("invalid catalog: {0}")]
    Catalog(String),

    #[error(transparent)]
    Ring(#[from] RingError),
}

pub type Result<T, E = HarnessError> = std::result::Result<T, E>;
