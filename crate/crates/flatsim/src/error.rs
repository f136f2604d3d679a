use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("bad gluing: {0}")]
    BadGluing(String),
    #[error("permutation is reducible: {0:?}")]
    Reducible(Vec<usize>),
    #[error("sampling failed after {0} attempts")]
    SamplingFailure(usize),
    #[error("tolerance breach: {0}")]
    ToleranceBreach(String),
}

pub type Result<T> = std::result::Result<T, Error>;
