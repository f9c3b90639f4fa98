use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix has determinant {0}, expected +1 or -1")]
    NotUnimodular(String),

    #[error("matrix is not nilpotent (nonzero trace or determinant)")]
    NotNilpotent,

    #[error("entries do not satisfy y*z + x^2 = 0")]
    InvalidNilpotentEntries,

    #[error("invalid primitive triple: {0}")]
    InvalidTriple(String),

    #[error("invalid parameter pair: {0}")]
    InvalidParams(String),

    #[error("word is not a coset representative (rightmost generator must be L)")]
    NotCosetWord,

    #[error("cannot parse word: {0}")]
    WordParse(String),

    #[error("cannot parse path: {0}")]
    PathParse(String),

    #[error("difference must be odd and nonzero")]
    EvenDifference,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("descent requires a prime p = 1 (mod 8), got p = {0} (mod 8) for {1}")]
    BadResidue(u64, u64),

    #[error("not representable: {0}")]
    NotRepresentable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
