use thiserror::Error;

use crate::algebra::CoeffDomain;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("inexact division over {domain}")]
    InexactDivision { domain: CoeffDomain },

    #[error("series is not a unit: its constant term is zero")]
    NonUnit,

    #[error("insufficient precision: need {needed} coefficients, have {available}")]
    Precision { needed: usize, available: usize },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid quadratic model: {0}")]
    InvalidModel(String),

    #[error("ill-posed continued fraction at term {index}: {reason}")]
    IllPosedFraction { index: usize, reason: String },

    #[error("partial quotient {index} is constant")]
    MalformedQuotient { index: usize },

    #[error("H-fraction certifies Hankel values only up to index {certified}, {requested} requested")]
    InsufficientTerms { requested: usize, certified: usize },

    #[error("no cycle found within {0} steps")]
    NoCycle(usize),
}
