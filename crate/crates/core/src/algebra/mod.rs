//! Exact arithmetic kernel.

pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod series;

pub use matrix::ExactMatrix;
pub use poly::Polynomial;
pub use scalar::{is_prime, parse_rational, rational_mod, reduce_mod, Coeff, CoeffDomain, FieldCoeff, Fp};
pub use series::{LowestTerm, TruncatedSeries};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub type QPoly = Polynomial<BigRational>;
pub type ZPoly = Polynomial<BigInt>;
pub type QSeries = TruncatedSeries<BigRational>;
pub type ZSeries = TruncatedSeries<BigInt>;
