use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("insertion slot {slot} out of range for a permutation of length {len}")]
    InvalidPosition { slot: usize, len: usize },

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("n = {n} exceeds the configured limit of {cap}")]
    ResourceLimit { n: usize, cap: usize },

    #[error("operator {op} cannot act on z^{zdeg} terms")]
    Domain { op: &'static str, zdeg: u32 },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    /// A construction produced something that contradicts its own contract.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
