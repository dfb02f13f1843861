use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("enumeration needs {bits} edge bits but the limit is {limit} (raise it with --bit-limit, hard cap {cap})", cap = crate::HARD_BIT_CAP)]
    EnumerationLimit { bits: u32, limit: u32 },
    #[error("graph is not connected")]
    Disconnected,
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
    #[error("cannot parse partition {input:?}: bad token {token:?}")]
    PartitionParse { input: String, token: String },
}
