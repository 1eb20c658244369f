//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("the proposed modulus is reducible")]
    ReducibleModulus,
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("polynomial is not square-free")]
    NotSquarefree,
    #[error("exhaustion guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("inconsistent character list: {0}")]
    InconsistentCharacters(String),
    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
