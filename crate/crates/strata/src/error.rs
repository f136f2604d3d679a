//! Error type shared across the exact engine.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("positive entries sum to an odd number: {0:?}")]
    OddSum(Vec<u32>),
    #[error("malformed stratum: {0}")]
    InvalidStratum(String),
    #[error("zero of order {order} not present in stratum {stratum}")]
    ZeroNotInStratum { order: u32, stratum: String },
    #[error("no volume tabulated for {0}; extend the volume table to compute this value")]
    MissingVolume(String),
    #[error("stratum {0} has an odd-order zero, so no spin parity is defined")]
    NoSpinStructure(String),
    #[error("component {label} does not exist for stratum {stratum}")]
    UnknownComponent { label: String, stratum: String },
    #[error("configuration is not admissible for this component: {0}")]
    NotAdmissible(String),
    #[error("malformed cyclic configuration: {0}")]
    MalformedCycle(String),
    #[error("dimension identity violated: {0}")]
    DimensionMismatch(String),
    #[error("parse error at byte {offset}: {message}")]
    ParseError { offset: usize, message: String },
    #[error("parse error on line {line}: {message}")]
    TableParseError { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
